#include "mackeyss/bredon.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace mss {

// ---------------------------------------------------------------- labels

std::string GeneratorLabel::str() const
{
    std::string out;
    if (coefficient != 1)
        out += coefficient.str();
    if (twisted)
        out += "u⁻";
    if (!a.is_zero())
        out += "a_{" + a.str() + "}";
    if (!u.is_zero())
        out += "u_{" + u.str() + "}";
    out += monomial;
    return out.empty() ? "1" : out;
}

bool operator==(const GeneratorLabel& x, const GeneratorLabel& y)
{
    return x.coefficient == y.coefficient && x.twisted == y.twisted && x.a == y.a && x.u == y.u &&
           x.monomial == y.monomial;
}

bool operator<(const GeneratorLabel& x, const GeneratorLabel& y)
{
    return std::tie(x.twisted, x.a, x.u, x.monomial) < std::tie(y.twisted, y.a, y.u, y.monomial) ||
           (std::tie(x.twisted, x.a, x.u, x.monomial) == std::tie(y.twisted, y.a, y.u, y.monomial) &&
            x.coefficient < y.coefficient);
}

GeneratorLabel gold_rewrite(const GeneratorLabel& x)
{
    int n = x.a.n();
    if (n < 2)
        return x;
    RepSum two_sigma = RepSum::sigma(n, 2);
    RepSum lp = RepSum::lambda_prime(n);
    auto contains = [](const RepSum& w, const RepSum& v) {
        for (const auto& [irr, c] : v.terms())
            if (w.count(irr) < c)
                return false;
        return true;
    };
    if (!contains(x.a, two_sigma) || !contains(x.u, lp))
        return x;
    GeneratorLabel y = x;
    y.a = x.a - two_sigma + lp;
    y.u = x.u - lp + two_sigma;
    y.coefficient = x.coefficient * 2;
    return y;
}

// ---------------------------------------------------------------- closed form

namespace {

std::string b_name(int j, int k)
{
    return fmt::format("B({},{})", j, k);
}

void add_entry(HomologyTable& t, int degree, HomologyEntry e)
{
    if (!e.functor.is_zero())
        t[degree].push_back(std::move(e));
}

}  // namespace

HomologyTable homology_closed_form(const RepSum& w)
{
    int n = w.n();
    int shift = w.trivial_count();
    RepSum w0 = w - RepSum::trivial(n, shift);
    HomologyTable out;
    if (w0.is_zero()) {
        GeneratorLabel label;
        label.a = label.u = RepSum(n);
        add_entry(out, shift, {make_Z(n), label, "Z"});
        return out;
    }
    if (is_orientable(w0)) {
        for (const auto& d : homology_decompositions(w0)) {
            GeneratorLabel label{1, d.v_prime, d.v_double_prime, false, {}};
            int deg = shift + d.v_double_prime.dim();
            if (d.v_prime.is_zero())
                add_entry(out, deg, {make_Z(n), label, "Z"});
            else
                add_entry(out, deg,
                          {make_B(n - d.m_of_v_prime, d.m_of_v_prime, n), label,
                           b_name(n - d.m_of_v_prime, d.m_of_v_prime)});
        }
        return out;
    }
    // W = σ + W' with W' orientable.
    RepSum sigma = RepSum::sigma(n);
    RepSum wp = w0 - sigma;
    for (const auto& d : homology_decompositions(wp)) {
        GeneratorLabel label{1, sigma + d.v_prime, d.v_double_prime, false, {}};
        add_entry(out, shift + d.v_double_prime.dim(), {make_B(1, n - 1, n), label, b_name(1, n - 1)});
    }
    HomologyTable below = homology_closed_form(restrict(wp, n - 1));
    for (const auto& [deg, entries] : below) {
        if (deg % 2 != 0)
            continue;
        for (const auto& e : entries) {
            GeneratorLabel label = e.label;
            label.twisted = true;
            add_entry(out, shift + deg + 1, {signed_induce(e.functor), label, e.name + "^-"});
        }
    }
    return out;
}

// ---------------------------------------------------------------- cell complexes

namespace {

std::vector<std::size_t> cycle(std::size_t size)
{
    std::vector<std::size_t> g(size);
    for (std::size_t i = 0; i < size; ++i)
        g[i] = (i + 1) % size;
    return g;
}

// S^0 plus `length` free C_N-cells: augmentation, then gamma - 1 and the norm
// alternately.
CellComplex periodic_block(int n, std::size_t orbit, int length)
{
    CellComplex c;
    c.n = n;
    c.cells.emplace_back(n, std::vector<std::size_t>{0});
    c.boundary.emplace_back();
    for (int j = 1; j <= length; ++j) {
        c.cells.emplace_back(n, cycle(orbit));
        IntMatrix d;
        if (j == 1) {
            d = IntMatrix(1, orbit);
            for (std::size_t i = 0; i < orbit; ++i)
                d(0, i) = 1;
        } else if (j % 2 == 0) {
            d = IntMatrix(orbit, orbit);
            for (std::size_t i = 0; i < orbit; ++i) {
                d(i, i) -= 1;
                d((i + 1) % orbit, i) += 1;
            }
        } else {
            d = IntMatrix(orbit, orbit);
            for (std::size_t r = 0; r < orbit; ++r)
                for (std::size_t i = 0; i < orbit; ++i)
                    d(r, i) = 1;
        }
        c.boundary.push_back(std::move(d));
    }
    return c;
}

}  // namespace

std::vector<std::string> CellComplex::check() const
{
    std::vector<std::string> problems;
    auto gamma_matrix = [](const PermutationSet& x) {
        IntMatrix g(x.size(), x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            g(x.gamma()[i], i) = 1;
        return g;
    };
    for (int d = 1; d <= top(); ++d) {
        const IntMatrix& b = boundary[d];
        if (b.rows() != cells[d - 1].size() || b.cols() != cells[d].size()) {
            problems.push_back(fmt::format("boundary {} has the wrong shape", d));
            continue;
        }
        if (gamma_matrix(cells[d - 1]) * b != b * gamma_matrix(cells[d]))
            problems.push_back(fmt::format("boundary {} is not equivariant", d));
        if (d >= 2 && !(boundary[d - 1] * b).is_zero())
            problems.push_back(fmt::format("boundary {} composed with boundary {} is nonzero", d - 1, d));
    }
    return problems;
}

CellComplex sigma_cells(int n, int count)
{
    if (n < 1)
        throw RepError("the sign representation needs n >= 1");
    return periodic_block(n, 2, count);
}

CellComplex lambda_cells(int n, int l, int count)
{
    if (l < 0 || l > n - 2)
        throw RepError("lambda(2^l) needs 0 <= l <= n-2");
    return periodic_block(n, std::size_t{1} << (n - l), 2 * count);
}

CellComplex trivial_cells(int n, int count)
{
    CellComplex c;
    c.n = n;
    for (int d = 0; d <= count; ++d) {
        c.cells.emplace_back(n, d == count ? std::vector<std::size_t>{0} : std::vector<std::size_t>{});
        std::size_t rows = d == 0 ? 0 : c.cells[d - 1].size();
        c.boundary.emplace_back(rows, c.cells[d].size());
    }
    return c;
}

CellComplex smash(const CellComplex& x, const CellComplex& y)
{
    if (x.n != y.n)
        throw std::invalid_argument("smash of complexes for different groups");
    CellComplex c;
    c.n = x.n;
    int top = x.top() + y.top();
    std::vector<std::vector<std::size_t>> gamma(top + 1);
    // Cells of degree d are laid out by i, then a, then b.
    std::vector<std::vector<std::size_t>> offset(top + 1, std::vector<std::size_t>(x.top() + 1, 0));
    for (int d = 0; d <= top; ++d) {
        std::size_t count = 0;
        for (int i = 0; i <= x.top(); ++i) {
            int j = d - i;
            offset[d][i] = count;
            if (j < 0 || j > y.top())
                continue;
            count += x.cells[i].size() * y.cells[j].size();
        }
        gamma[d].resize(count);
        for (int i = 0; i <= x.top(); ++i) {
            int j = d - i;
            if (j < 0 || j > y.top())
                continue;
            std::size_t ny = y.cells[j].size();
            for (std::size_t a = 0; a < x.cells[i].size(); ++a)
                for (std::size_t b = 0; b < ny; ++b)
                    gamma[d][offset[d][i] + a * ny + b] =
                        offset[d][i] + x.cells[i].gamma()[a] * ny + y.cells[j].gamma()[b];
        }
        c.cells.emplace_back(c.n, gamma[d]);
    }
    c.boundary.emplace_back();
    for (int d = 1; d <= top; ++d) {
        IntMatrix m(c.cells[d - 1].size(), c.cells[d].size());
        for (int i = 0; i <= x.top(); ++i) {
            int j = d - i;
            if (j < 0 || j > y.top())
                continue;
            std::size_t ny = y.cells[j].size();
            for (std::size_t a = 0; a < x.cells[i].size(); ++a)
                for (std::size_t b = 0; b < ny; ++b) {
                    std::size_t col = offset[d][i] + a * ny + b;
                    if (i >= 1) {
                        const IntMatrix& dx = x.boundary[i];
                        for (std::size_t a2 = 0; a2 < dx.rows(); ++a2)
                            if (!dx(a2, a).is_zero())
                                m(offset[d - 1][i - 1] + a2 * ny + b, col) += dx(a2, a);
                    }
                    if (j >= 1) {
                        const IntMatrix& dy = y.boundary[j];
                        std::size_t ny2 = y.cells[j - 1].size();
                        for (std::size_t b2 = 0; b2 < dy.rows(); ++b2)
                            if (!dy(b2, b).is_zero()) {
                                Integer v = dy(b2, b);
                                if (i % 2 == 1)
                                    v = -v;
                                m(offset[d - 1][i] + a * ny2 + b2, col) += v;
                            }
                    }
                }
        }
        c.boundary.push_back(std::move(m));
    }
    return c;
}

CellComplex sphere_cells(const RepSum& w)
{
    int n = w.n();
    CellComplex c = trivial_cells(n, 0);
    for (const auto& [x, count] : w.terms()) {
        switch (x.kind()) {
        case IrrepKind::Trivial:
            c = smash(c, trivial_cells(n, count));
            break;
        case IrrepKind::Sign:
            c = smash(c, sigma_cells(n, count));
            break;
        case IrrepKind::TwoDim:
            c = smash(c, lambda_cells(n, x.kernel_exponent(), count));
            break;
        }
    }
    return c;
}

std::vector<MackeyFunctor> cellular_homology(const CellComplex& c)
{
    int n = c.n;
    std::vector<MackeyFunctor> chains;
    for (const auto& x : c.cells)
        chains.push_back(fixed_point_functor(x));
    MackeyFunctor zero = MackeyFunctor::zero(n);
    auto boundary = [&](int d) {
        if (d == 0 || d > c.top())
            return MackeyHom::zero(d == 0 ? chains[0] : zero, d == 0 ? zero : chains[c.top()]);
        MackeyHom f;
        for (int k = 0; k <= n; ++k)
            f.component.emplace_back(chains[d].level[k], chains[d - 1].level[k],
                                     fixed_point_matrix(c.cells[d], c.cells[d - 1], c.boundary[d], k));
        return f;
    };
    std::vector<MackeyFunctor> out;
    for (int d = 0; d <= c.top(); ++d)
        out.push_back(homology(chains[d], boundary(d + 1), boundary(d)));
    return out;
}

HomologyTable homology_cellular_oracle(const RepSum& w)
{
    auto h = cellular_homology(sphere_cells(w));
    HomologyTable out;
    for (int d = 0; d < static_cast<int>(h.size()); ++d) {
        if (h[d].is_zero())
            continue;
        GeneratorLabel label;
        label.a = label.u = RepSum(w.n());
        label.monomial = fmt::format("[cellular degree {}]", d);
        out[d].push_back({h[d], label, level_summary(h[d])});
    }
    return out;
}

MackeyFunctor degree_functor(const HomologyTable& t, int degree, int n)
{
    auto it = t.find(degree);
    if (it == t.end() || it->second.empty())
        return MackeyFunctor::zero(n);
    std::vector<MackeyFunctor> parts;
    for (const auto& e : it->second)
        parts.push_back(e.functor);
    return parts.size() == 1 ? parts.front() : direct_sum(parts).functor;
}

std::vector<std::string> compare_tables(const HomologyTable& a, const HomologyTable& b, int n)
{
    std::vector<int> degrees;
    for (const auto& [d, e] : a)
        degrees.push_back(d);
    for (const auto& [d, e] : b)
        if (!a.count(d))
            degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end());
    std::vector<std::string> out;
    for (int d : degrees) {
        MackeyFunctor x = degree_functor(a, d, n), y = degree_functor(b, d, n);
        if (!isomorphic(x, y))
            out.push_back(fmt::format("degree {}: {} vs {}", d, level_summary(x), level_summary(y)));
    }
    return out;
}

// ---------------------------------------------------------------- slices

std::vector<SliceTerm> slice_homotopy(const SliceCell& cell, int n)
{
    if (cell.k < 0 || cell.k > n || cell.m < 1)
        throw std::invalid_argument("slice cell out of range");
    RepSum w = cell.m * RepSum::rho(cell.k);
    int t = cell.m << cell.k;
    std::vector<SliceTerm> out;
    for (const auto& [deg, entries] : homology_closed_form(w))
        for (const auto& e : entries)
            out.push_back({deg, t - deg, t, InducedFunctor{cell.k, e.functor, e.name}, e.label});
    return out;
}

}  // namespace mss
