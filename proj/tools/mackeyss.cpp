#include "mackeyss/bredon.hpp"
#include "mackeyss/homalg.hpp"
#include "mackeyss/serialize.hpp"
#include "mackeyss/slice.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <iostream>
#include <string>

using namespace mss;

namespace {

enum Exit { ok = 0, parse_error = 1, precondition = 2, internal = 3 };

// Raised for input that does not parse (exit 1), as opposed to input that
// parses but violates a precondition (exit 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure with a diagnostic dump (exit 3).
struct ConsistencyError : std::runtime_error {
    ConsistencyError(const std::string& what, std::string dump) : std::runtime_error(what), dump(std::move(dump)) {}
    std::string dump;
};

bool verbose()
{
    const char* v = std::getenv("MACKEYSS_LOG");
    return v && std::string(v) == "debug";
}

void log_lines(const std::vector<std::string>& lines)
{
    if (!verbose())
        return;
    for (const auto& l : lines)
        std::cerr << "[mackeyss] " << l << '\n';
}

void check_n(int n, int lo, int hi)
{
    if (n < lo || n > hi)
        throw std::invalid_argument(fmt::format("--n must lie in [{}, {}], got {}", lo, hi, n));
}

RepSum parse_rep(int n, const std::string& text)
{
    try {
        return RepSum::parse(n, text);
    } catch (const RepError& e) {
        throw InputError(fmt::format("cannot parse representation '{}': {}", text, e.what()));
    }
}

MackeyFunctor parse_functor(const std::string& name, int n)
{
    try {
        return make_named(name, n);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::string table_text(const RepSum& w, const HomologyTable& t)
{
    std::string out = fmt::format("H_*(S^{{{}}}) for C_{}, dim {}\n", w.str(), 1 << w.n(), w.dim());
    for (const auto& [d, list] : t)
        for (const auto& e : list) {
            out += fmt::format("\ndegree {}: {} · {}\n", d, e.name, e.label.str());
            out += lewis_diagram(e.functor);
        }
    return out;
}

int run_homology(int n, const std::string& rep, bool oracle, const std::string& format)
{
    check_n(n, 1, 6);
    RepSum w = parse_rep(n, rep);
    if (w.trivial_count() > 0)
        throw std::invalid_argument(fmt::format("{} has a {}-dimensional fixed subspace", w.str(), w.trivial_count()));
    HomologyTable t = homology_closed_form(w);
    if (oracle) {
        auto diff = compare_tables(t, homology_cellular_oracle(w), n);
        if (!diff.empty()) {
            std::string dump;
            for (const auto& d : diff)
                dump += d + '\n';
            throw ConsistencyError("closed form and cellular oracle disagree", dump);
        }
        if (verbose())
            std::cerr << "[mackeyss] cellular oracle agrees\n";
    }
    std::cout << (format == "json" ? homology_json(w, t) + "\n" : table_text(w, t));
    return ok;
}

int run_mackey_show(const std::string& name, int n, const std::string& format)
{
    check_n(n, 0, 8);
    MackeyFunctor m = parse_functor(name, n);
    if (format == "json")
        std::cout << functor_json(m, name) << '\n';
    else
        std::cout << name << " for C_" << (1 << n) << '\n' << lewis_diagram(m);
    return ok;
}

int run_ext(const std::string& source, const std::string& target, int n, const std::string& format)
{
    check_n(n, 1, 6);
    auto result = ext(parse_functor(source, n), parse_functor(target, n), 1);
    if (format == "json") {
        std::cout << ext_json(source, target, n, result) << '\n';
        return ok;
    }
    for (const auto& r : result)
        std::cout << fmt::format("{}({}, {}) = {}\n", r.degree == 0 ? "Hom" : fmt::format("Ext^{}", r.degree), source,
                                 target, r.group.str());
    return ok;
}

Page stem_filter(Page p, int stem)
{
    if (stem == 0)
        return p;
    std::vector<PageEntry> keep;
    for (auto& e : p.entries)
        if (e.stem == stem)
            keep.push_back(std::move(e));
    p.entries = std::move(keep);
    p.min_stem = p.max_stem = stem;
    return p;
}

std::string render(const Page& p, const std::string& format)
{
    if (format == "json")
        return page_json(p) + "\n";
    if (format == "svg")
        return page_svg(p);
    return page_text(p);
}

Page guarded_differentials(const Page& e2)
{
    try {
        return apply_differentials(e2);
    } catch (const DifferentialError& e) {
        throw ConsistencyError("differential check failed", page_text(e2) + "\n" + e.what() + "\n");
    }
}

int run_slice(const std::string& which, int n, int stem, bool lambda_prime, const std::string& format)
{
    check_n(n, lambda_prime ? 2 : 1, 6);
    if (stem != 0 && (stem < 1 || stem > 4))
        throw std::invalid_argument("--stem must lie in [1, 4]");
    Page e2 = lambda_prime ? assemble_lambda_prime_E2(n) : assemble_E2(n);
    if (which == "einf") {
        Page einf = guarded_differentials(e2);
        log_lines(einf.log);
        std::cout << render(stem_filter(einf, stem), format);
    } else {
        std::cout << render(stem_filter(e2, stem), format);
    }
    return ok;
}

int run_pi3(int n, const std::string& format)
{
    check_n(n, 2, 6);
    Pi3Result r;
    try {
        r = pi3_report(n);
    } catch (const DifferentialError& e) {
        throw ConsistencyError("differential check failed", e.what());
    } catch (const ExtensionError& e) {
        throw ConsistencyError("unresolvable extension", e.what());
    }
    log_lines(r.einf.log);
    log_lines(r.resolution.log);
    if (format == "json") {
        std::cout << pi3_json(r) << '\n';
        return ok;
    }
    if (format == "svg") {
        std::cout << page_svg(r.einf);
        return ok;
    }
    std::cout << fmt::format("pi_3 for C_{}\n", 1 << n);
    std::string sum;
    for (const auto& s : r.resolution.summands)
        sum += (sum.empty() ? "" : " + ") + s.str(n);
    std::cout << "  = " << sum << "\n\n" << lewis_diagram(r.resolution.total) << '\n';
    std::cout << "E_inf column (t-s = 3):\n";
    for (const auto& c : r.column)
        std::cout << fmt::format("  s={:<4} {}\n", c.s, c.functor.str(n));
    std::cout << "\nextensions:\n";
    for (const auto& l : r.resolution.log)
        std::cout << "  " << l << '\n';
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mackey functors, Bredon homology and the slice spectral sequence for cyclic 2-groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "mackeyss 0.1.0");

    int n = 1;
    std::string format = "text";
    auto formats = CLI::IsMember({"text", "json"});

    auto* homology = app.add_subcommand("homology", "Bredon homology of a representation sphere");
    std::string rep;
    bool oracle = false;
    homology->add_option("--n", n, "group C_{2^n}")->required();
    homology->add_option("--rep", rep, "representation, e.g. \"3s+l2+l1\"")->required();
    homology->add_flag("--oracle", oracle, "also run the cellular computation and compare");
    homology->add_option("--format", format)->check(formats);

    auto* mackey = app.add_subcommand("mackey", "Named Mackey functors");
    mackey->require_subcommand(1);
    auto* show = mackey->add_subcommand("show", "Lewis diagram of a named functor");
    std::string name;
    show->add_option("name", name, "Z, Z*, B(j,k), Bstar(1,k)")->required();
    show->add_option("--n", n, "group C_{2^n}")->required();
    show->add_option("--format", format)->check(formats);

    auto* ext_cmd = app.add_subcommand("ext", "Hom and Ext^1 between named functors");
    std::string source, target;
    ext_cmd->add_option("--n", n, "group C_{2^n}")->required();
    ext_cmd->add_option("--source", source)->required();
    ext_cmd->add_option("--target", target)->required();
    ext_cmd->add_option("--format", format)->check(formats);

    auto* slice = app.add_subcommand("slice", "Slice spectral sequence pages in stems 1 to 4");
    std::string which;
    int stem = 0;
    bool lambda_prime = false;
    slice->add_option("page", which, "e2 or einf")->required()->check(CLI::IsMember({"e2", "einf"}));
    slice->add_option("--n", n, "group C_{2^n}")->required();
    slice->add_option("--stem", stem, "restrict to one stem");
    slice->add_flag("--lambda-prime", lambda_prime, "smash with S^{λ'} (stems 1 and 2)");
    slice->add_option("--format", format)->check(CLI::IsMember({"text", "json", "svg"}));

    auto* pi3_cmd = app.add_subcommand("pi3", "The 3-stem homotopy Mackey functor");
    pi3_cmd->add_option("--n", n, "group C_{2^n}")->required();
    pi3_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_error;
    }

    try {
        if (homology->parsed())
            return run_homology(n, rep, oracle, format);
        if (show->parsed())
            return run_mackey_show(name, n, format);
        if (ext_cmd->parsed())
            return run_ext(source, target, n, format);
        if (slice->parsed())
            return run_slice(which, n, stem, lambda_prime, format);
        if (pi3_cmd->parsed())
            return run_pi3(n, format);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << '\n' << e.dump;
        return internal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return precondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal;
    }
    return internal;
}
