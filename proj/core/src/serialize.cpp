#include "mackeyss/serialize.hpp"

#include <nlohmann/json.hpp>

namespace mss {

namespace {

using json = nlohmann::ordered_json;

json integer(const Integer& x)
{
    if (x.fits_int64())
        return x.to_int64();
    return x.str();
}

json group(const FGAbGroup& g)
{
    json torsion = json::array();
    for (const auto& d : g.torsion())
        torsion.push_back(integer(d));
    return {{"free", g.free_rank()}, {"torsion", torsion}};
}

// Rows of the matrix in the generator coordinates of source and target.
json matrix(const GroupHom& f)
{
    const IntMatrix& m = f.matrix();
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(integer(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json functor(const MackeyFunctor& m)
{
    json levels = json::array(), res = json::array(), tr = json::array(), weyl = json::array();
    for (int k = 0; k <= m.n; ++k) {
        levels.push_back(group(m.level[static_cast<std::size_t>(k)]));
        weyl.push_back(matrix(m.weyl[static_cast<std::size_t>(k)]));
        if (k < m.n) {
            res.push_back(matrix(m.res[static_cast<std::size_t>(k)]));
            tr.push_back(matrix(m.tr[static_cast<std::size_t>(k)]));
        }
    }
    return {{"n", m.n},         {"levels", levels}, {"res", res},
            {"tr", tr},         {"weyl", weyl},     {"summary", level_summary(m)}};
}

json label(const GeneratorLabel& l)
{
    return {{"text", l.str()},       {"coefficient", integer(l.coefficient)}, {"a", l.a.str()},
            {"u", l.u.str()},        {"twisted", l.twisted},                   {"monomial", l.monomial}};
}

json document(const std::string& kind)
{
    return {{"schema_version", json_schema_version}, {"kind", kind}};
}

json induced(const InducedFunctor& f, int n)
{
    return {{"name", f.str(n)}, {"level", f.level}, {"base", f.name}};
}

json page(const Page& p)
{
    json entries = json::array();
    for (const auto& e : p.entries) {
        json x = {{"stem", e.stem}, {"s", e.s}, {"t", e.t()}, {"cell", e.cell}, {"label", label(e.label)}};
        x.update(induced(e.functor, p.n));
        entries.push_back(x);
    }
    json diffs = json::array();
    for (const auto& d : p.differentials)
        diffs.push_back({{"rule", d.rule},
                         {"r", d.r},
                         {"source", {d.source_stem, d.source_s}},
                         {"target", {d.target_stem, d.target_s}},
                         {"level", d.level},
                         {"description", d.description},
                         {"checks", d.checks}});
    json forced = json::array();
    for (const auto& f : p.forced)
        forced.push_back({{"level", f.level},
                          {"quotient_s", f.quotient_s},
                          {"sub_s", f.sub_s},
                          {"quotient", f.quotient.str(p.n)},
                          {"sub", f.sub.str(p.n)},
                          {"middle", f.middle.str(p.n)}});
    json out = document("page");
    out.update({{"n", p.n},
                {"page", p.infinity ? "E_inf" : "E_2"},
                {"stems", {p.min_stem, p.max_stem}},
                {"lambda_prime", p.twisted_by_lambda_prime},
                {"entries", entries},
                {"differentials", diffs},
                {"forced_extensions", forced},
                {"log", p.log}});
    return out;
}

}  // namespace

std::string functor_json(const MackeyFunctor& m, const std::string& name)
{
    json out = document("mackey_functor");
    if (!name.empty())
        out["name"] = name;
    out["functor"] = functor(m);
    return out.dump(2);
}

std::string homology_json(const RepSum& w, const HomologyTable& t)
{
    json degrees = json::array();
    for (const auto& [d, list] : t)
        for (const auto& e : list)
            degrees.push_back({{"degree", d}, {"name", e.name}, {"label", label(e.label)}, {"functor", functor(e.functor)}});
    json out = document("homology");
    out.update({{"n", w.n()}, {"rep", w.str()}, {"dim", w.dim()}, {"summands", degrees}});
    return out.dump(2);
}

std::string ext_json(const std::string& source, const std::string& target, int n, const std::vector<ExtResult>& ext)
{
    json groups = json::array();
    for (const auto& e : ext)
        groups.push_back({{"degree", e.degree}, {"group", group(e.group)}, {"text", e.group.str()}});
    json out = document("ext");
    out.update({{"n", n}, {"source", source}, {"target", target}, {"ext", groups}});
    return out.dump(2);
}

std::string page_json(const Page& p)
{
    return page(p).dump(2);
}

std::string pi3_json(const Pi3Result& r)
{
    json column = json::array();
    for (const auto& c : r.column)
        column.push_back({{"s", c.s}, {"functor", induced(c.functor, r.n)}});
    json summands = json::array();
    for (const auto& s : r.resolution.summands)
        summands.push_back(induced(s, r.n));
    const FGAbGroup& top = r.resolution.total.level[static_cast<std::size_t>(r.n)];
    json out = document("pi3");
    out.update({{"n", r.n},
                {"functor", functor(r.resolution.total)},
                {"summands", summands},
                {"top_exponent", integer(top.exponent())},
                {"einf_column", column},
                {"extensions", r.resolution.log},
                {"einf", page(r.einf)}});
    return out.dump(2);
}

}  // namespace mss
