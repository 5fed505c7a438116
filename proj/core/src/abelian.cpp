#include "mackeyss/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace mss {

// ---------------------------------------------------------------- FGAbGroup

FGAbGroup::FGAbGroup(std::size_t free_rank, IntVector torsion) : free_(free_rank), torsion_(std::move(torsion))
{
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < Integer(2))
            throw std::invalid_argument("invariant factors must be at least 2");
        if (i > 0 && !divides(torsion_[i - 1], torsion_[i]))
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
}

FGAbGroup FGAbGroup::cyclic(const Integer& d)
{
    if (d.is_zero())
        return integers(1);
    if (abs(d).is_one())
        return zero();
    return FGAbGroup(0, {abs(d)});
}

FGAbGroup FGAbGroup::from_orders(const IntVector& orders)
{
    std::vector<FGAbGroup> parts;
    for (const auto& d : orders)
        parts.push_back(cyclic(d));
    return direct_sum_data(parts).group;
}

Integer FGAbGroup::order() const
{
    if (free_ > 0)
        return Integer(0);
    Integer o(1);
    for (const auto& d : torsion_)
        o *= d;
    return o;
}

Integer FGAbGroup::exponent() const
{
    return torsion_.empty() ? Integer(1) : torsion_.back();
}

IntVector FGAbGroup::reduce(IntVector v) const
{
    if (v.size() != ngens())
        throw std::invalid_argument("element has wrong length for " + str());
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        v[i] = mod(v[i], torsion_[i]);
    return v;
}

bool FGAbGroup::is_zero_element(const IntVector& v) const
{
    for (const auto& x : reduce(v))
        if (!x.is_zero())
            return false;
    return true;
}

IntMatrix FGAbGroup::relations() const
{
    IntMatrix r(ngens(), torsion_.size());
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        r(i, i) = torsion_[i];
    return r;
}

std::string FGAbGroup::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : torsion_) {
        os << (first ? "" : "+") << "Z/" << d;
        first = false;
    }
    if (free_ > 0) {
        os << (first ? "" : "+") << "Z";
        if (free_ > 1)
            os << "^" << free_;
    }
    return os.str();
}

FGAbGroup direct_sum(const FGAbGroup& a, const FGAbGroup& b)
{
    return direct_sum_data({a, b}).group;
}

DirectSum direct_sum_data(const std::vector<FGAbGroup>& parts)
{
    struct Coord {
        Integer order;
        std::size_t index;
    };
    std::vector<Coord> tors;
    std::vector<std::size_t> frees;
    std::size_t total = 0;
    for (const auto& g : parts) {
        for (std::size_t i = 0; i < g.ngens(); ++i) {
            if (g.gen_order(i).is_zero())
                frees.push_back(total + i);
            else
                tors.push_back({g.gen_order(i), total + i});
        }
        total += g.ngens();
    }
    std::stable_sort(tors.begin(), tors.end(), [](const Coord& x, const Coord& y) { return x.order < y.order; });
    bool chain = true;
    for (std::size_t i = 1; i < tors.size() && chain; ++i)
        chain = divides(tors[i - 1].order, tors[i].order);

    DirectSum out;
    if (chain) {
        IntVector t;
        out.perm.assign(total, 0);
        std::size_t pos = 0;
        for (const auto& c : tors) {
            t.push_back(c.order);
            out.perm[c.index] = pos++;
        }
        for (std::size_t f : frees)
            out.perm[f] = pos++;
        out.group = FGAbGroup(frees.size(), t);
        out.is_permutation = true;
        return out;
    }
    std::vector<IntVector> rels;
    for (const auto& c : tors) {
        IntVector r(total);
        r[c.index] = c.order;
        rels.push_back(r);
    }
    LatticeQuotient q(IntMatrix::identity(total), IntMatrix::from_columns(total, rels));
    out.group = q.group();
    out.to_canonical = IntMatrix(out.group.ngens(), total);
    for (std::size_t i = 0; i < total; ++i) {
        IntVector e(total);
        e[i] = 1;
        out.to_canonical.set_column(i, q.coords(e));
    }
    out.from_canonical = q.embedding();
    return out;
}

IntMatrix DirectSum::to_canonical_matrix() const
{
    if (!is_permutation)
        return to_canonical;
    IntMatrix m(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        m(perm[i], i) = 1;
    return m;
}

IntMatrix DirectSum::from_canonical_matrix() const
{
    if (!is_permutation)
        return from_canonical;
    IntMatrix m(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        m(i, perm[i]) = 1;
    return m;
}

// ---------------------------------------------------------------- GroupHom

void check_well_defined(const FGAbGroup& s, const FGAbGroup& t, const IntMatrix& m)
{
    if (m.rows() != t.ngens() || m.cols() != s.ngens())
        throw MalformedHom("hom matrix has wrong shape");
    for (std::size_t c = 0; c < s.torsion().size(); ++c) {
        const Integer& d = s.torsion()[c];
        for (std::size_t r = 0; r < t.ngens(); ++r) {
            const Integer& e = t.gen_order(r);
            Integer x = d * m(r, c);
            bool ok = e.is_zero() ? x.is_zero() : divides(e, x);
            if (!ok)
                throw MalformedHom("generator of order " + d.str() + " has an image of the wrong order");
        }
    }
}

GroupHom::GroupHom(FGAbGroup source, FGAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens())
        throw MalformedHom("hom matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                           ", expected " + std::to_string(target_.ngens()) + "x" + std::to_string(source_.ngens()));
    for (std::size_t r = 0; r < target_.torsion().size(); ++r)
        for (std::size_t c = 0; c < matrix_.cols(); ++c)
            matrix_(r, c) = mod(matrix_(r, c), target_.torsion()[r]);
    check_well_defined(source_, target_, matrix_);
}

GroupHom GroupHom::zero(const FGAbGroup& s, const FGAbGroup& t)
{
    return GroupHom(s, t, IntMatrix(t.ngens(), s.ngens()));
}

GroupHom GroupHom::identity(const FGAbGroup& g)
{
    return GroupHom(g, g, IntMatrix::identity(g.ngens()));
}

GroupHom GroupHom::scalar(const FGAbGroup& g, const Integer& k)
{
    return GroupHom(g, g, k * IntMatrix::identity(g.ngens()));
}

bool GroupHom::is_zero() const
{
    return matrix_.is_zero();
}

bool GroupHom::is_injective() const
{
    return kernel(*this).group.is_zero();
}

bool GroupHom::is_surjective() const
{
    return cokernel(*this).group.is_zero();
}

GroupHom operator*(const GroupHom& g, const GroupHom& f)
{
    if (f.target_ != g.source_)
        throw MalformedHom("composition of incompatible homs");
    return GroupHom(f.source_, g.target_, g.matrix_ * f.matrix_);
}

GroupHom operator+(const GroupHom& a, const GroupHom& b)
{
    if (a.source_ != b.source_ || a.target_ != b.target_)
        throw MalformedHom("sum of homs with different endpoints");
    return GroupHom(a.source_, a.target_, a.matrix_ + b.matrix_);
}

GroupHom operator-(const GroupHom& a, const GroupHom& b)
{
    if (a.source_ != b.source_ || a.target_ != b.target_)
        throw MalformedHom("difference of homs with different endpoints");
    return GroupHom(a.source_, a.target_, a.matrix_ - b.matrix_);
}

bool operator==(const GroupHom& a, const GroupHom& b)
{
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
}

// ---------------------------------------------------------------- LatticeQuotient

LatticeQuotient::LatticeQuotient(const IntMatrix& gens, const IntMatrix& rels) : ambient_(gens.rows())
{
    if (rels.rows() != ambient_ && rels.cols() != 0)
        throw std::invalid_argument("relation vectors live in a different ambient lattice");
    SmithOptions opt;
    opt.want_v = false;
    opt.want_uinv = true;
    SmithForm s = smith_normal_form(gens, opt);
    rank_ = s.rank;
    d_.resize(rank_);
    std::vector<std::size_t> first(rank_);
    for (std::size_t j = 0; j < rank_; ++j) {
        d_[j] = s.D(j, j);
        first[j] = j;
    }
    U_ = s.U;
    basis_ = IntMatrix(ambient_, rank_);
    for (std::size_t j = 0; j < rank_; ++j)
        for (std::size_t i = 0; i < ambient_; ++i)
            basis_(i, j) = s.Uinv(i, j) * d_[j];

    IntMatrix C(rank_, rels.cols());
    for (std::size_t c = 0; c < rels.cols(); ++c) {
        IntVector y = U_.apply(rels.column(c));
        for (std::size_t i = rank_; i < ambient_; ++i)
            if (!y[i].is_zero())
                throw std::invalid_argument("relation lattice is not contained in the generator lattice");
        for (std::size_t j = 0; j < rank_; ++j) {
            if (!divides(d_[j], y[j]))
                throw std::invalid_argument("relation lattice is not contained in the generator lattice");
            C(j, c) = y[j] / d_[j];
        }
    }
    SmithOptions opt2;
    opt2.want_v = false;
    opt2.want_uinv = true;
    SmithForm s2 = smith_normal_form(C, opt2);
    U2_ = s2.U;
    U2inv_ = s2.Uinv;
    IntVector tors;
    std::size_t nfree = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        Integer di = (i < C.cols()) ? s2.D(i, i) : Integer(0);
        if (di.is_one())
            continue;
        keep_.push_back(i);
        if (di.is_zero())
            ++nfree;
        else
            tors.push_back(di);
    }
    group_ = FGAbGroup(nfree, tors);
}

IntVector LatticeQuotient::coords(const IntVector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("coords: vector has wrong length");
    IntVector y = U_.apply(v);
    IntVector c(rank_);
    for (std::size_t i = rank_; i < ambient_; ++i)
        if (!y[i].is_zero())
            throw std::invalid_argument("coords: vector is not in the lattice");
    for (std::size_t j = 0; j < rank_; ++j) {
        if (!divides(d_[j], y[j]))
            throw std::invalid_argument("coords: vector is not in the lattice");
        c[j] = y[j] / d_[j];
    }
    IntVector z = U2_.apply(c);
    IntVector out(keep_.size());
    for (std::size_t k = 0; k < keep_.size(); ++k)
        out[k] = z[keep_[k]];
    return group_.reduce(out);
}

bool LatticeQuotient::contains(const IntVector& v) const
{
    IntVector y = U_.apply(v);
    for (std::size_t i = rank_; i < ambient_; ++i)
        if (!y[i].is_zero())
            return false;
    for (std::size_t j = 0; j < rank_; ++j)
        if (!divides(d_[j], y[j]))
            return false;
    return true;
}

IntVector LatticeQuotient::representative(std::size_t i) const
{
    IntVector c = U2inv_.column(keep_.at(i));
    return basis_.apply(c);
}

IntMatrix LatticeQuotient::embedding() const
{
    IntMatrix m(ambient_, keep_.size());
    for (std::size_t k = 0; k < keep_.size(); ++k)
        m.set_column(k, representative(k));
    return m;
}

// ---------------------------------------------------------------- kernels, images

namespace {

// Generators of {x : F x in lattice(RB)}.
IntMatrix preimage_lattice(const IntMatrix& F, const IntMatrix& RB)
{
    IntMatrix M = hcat(F, RB);
    if (M.rows() == 0)
        return IntMatrix::identity(F.cols());
    IntMatrix K = integer_kernel(M);
    return K.block(0, 0, F.cols(), K.cols());
}

IntMatrix columns_matrix(std::size_t rows, const std::vector<IntVector>& v)
{
    return v.empty() ? IntMatrix(rows, 0) : IntMatrix::from_columns(rows, v);
}

}  // namespace

LatticeQuotient presented_kernel(const IntMatrix& F, const IntMatrix& RA, const IntMatrix& RB)
{
    IntMatrix RBfix = RB.cols() == 0 ? IntMatrix(F.rows(), 0) : RB;
    IntMatrix RAfix = RA.cols() == 0 ? IntMatrix(F.cols(), 0) : RA;
    return LatticeQuotient(preimage_lattice(F, RBfix), RAfix);
}

Subgroup kernel(const GroupHom& f)
{
    const FGAbGroup& A = f.source();
    LatticeQuotient q = presented_kernel(f.matrix(), A.relations(), f.target().relations());
    IntMatrix inc(A.ngens(), q.group().ngens());
    for (std::size_t k = 0; k < q.group().ngens(); ++k)
        inc.set_column(k, A.reduce(q.representative(k)));
    return {q.group(), GroupHom(q.group(), A, inc)};
}

IntMatrix kernel_lattice(const IntMatrix& F, const IntMatrix& RB)
{
    return preimage_lattice(F, RB.cols() == 0 ? IntMatrix(F.rows(), 0) : RB);
}

LatticeQuotient image_lattice(const GroupHom& f)
{
    IntMatrix RB = f.target().relations();
    return LatticeQuotient(hcat(f.matrix(), RB), RB);
}

LatticeQuotient cokernel_lattice(const GroupHom& f)
{
    const FGAbGroup& B = f.target();
    return LatticeQuotient(IntMatrix::identity(B.ngens()), hcat(f.matrix(), B.relations()));
}

LatticeQuotient homology_lattice(const GroupHom& f, const GroupHom& g)
{
    if (f.target() != g.source())
        throw MalformedHom("homology_lattice: maps are not composable");
    const FGAbGroup& B = f.target();
    return LatticeQuotient(kernel_lattice(g.matrix(), g.target().relations()), hcat(f.matrix(), B.relations()));
}

Subgroup image(const GroupHom& f)
{
    const FGAbGroup& B = f.target();
    LatticeQuotient q = image_lattice(f);
    IntMatrix inc(B.ngens(), q.group().ngens());
    for (std::size_t k = 0; k < q.group().ngens(); ++k)
        inc.set_column(k, B.reduce(q.representative(k)));
    return {q.group(), GroupHom(q.group(), B, inc)};
}

Quotient cokernel(const GroupHom& f)
{
    const FGAbGroup& B = f.target();
    LatticeQuotient q = cokernel_lattice(f);
    IntMatrix proj(q.group().ngens(), B.ngens());
    for (std::size_t i = 0; i < B.ngens(); ++i) {
        IntVector e(B.ngens());
        e[i] = 1;
        proj.set_column(i, q.coords(e));
    }
    return {q.group(), GroupHom(B, q.group(), proj)};
}

Subgroup generated_subgroup(const FGAbGroup& g, const std::vector<IntVector>& gens)
{
    IntMatrix G = columns_matrix(g.ngens(), gens);
    return image(GroupHom(FGAbGroup::integers(gens.size()), g, G));
}

Quotient quotient_by(const FGAbGroup& g, const std::vector<IntVector>& gens)
{
    IntMatrix G = columns_matrix(g.ngens(), gens);
    return cokernel(GroupHom(FGAbGroup::integers(gens.size()), g, G));
}

bool is_exact(const GroupHom& f, const GroupHom& g)
{
    if (f.target() != g.source())
        throw MalformedHom("is_exact: maps are not composable");
    if (!(g * f).is_zero())
        return false;
    IntMatrix kerg = kernel_lattice(g.matrix(), g.target().relations());
    LatticeQuotient im = image_lattice(f);
    for (std::size_t c = 0; c < kerg.cols(); ++c)
        if (!im.contains(kerg.column(c)))
            return false;
    return true;
}

// ---------------------------------------------------------------- Hom groups

namespace {

std::vector<HomPair> make_pairs(const FGAbGroup& a, const FGAbGroup& b)
{
    std::vector<HomPair> pairs;
    for (std::size_t i = 0; i < a.ngens(); ++i)
        for (std::size_t j = 0; j < b.ngens(); ++j) {
            Integer d = a.gen_order(i), e = b.gen_order(j);
            if (!d.is_zero() && !e.is_zero()) {
                Integer g = gcd(d, e);
                if (!g.is_one())
                    pairs.push_back({i, j, e / g, g});
            } else if (d.is_zero()) {
                pairs.push_back({i, j, Integer(1), e});
            }
        }
    return pairs;
}

IntMatrix pair_relations(const std::vector<HomPair>& pairs)
{
    std::vector<IntVector> cols;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (!pairs[k].order.is_zero()) {
            IntVector c(pairs.size());
            c[k] = pairs[k].order;
            cols.push_back(c);
        }
    return columns_matrix(pairs.size(), cols);
}

}  // namespace

HomGroup::HomGroup(const FGAbGroup& a, const FGAbGroup& b)
    : a_(a), b_(b), pairs_(make_pairs(a, b)), quotient_(IntMatrix::identity(pairs_.size()), pair_relations(pairs_))
{
}

IntVector HomGroup::pair_orders() const
{
    IntVector o;
    for (const auto& p : pairs_)
        o.push_back(p.order);
    return o;
}

IntMatrix HomGroup::matrix_from_pairs(const IntVector& p) const
{
    IntMatrix m(b_.ngens(), a_.ngens());
    for (std::size_t k = 0; k < pairs_.size(); ++k)
        if (!p[k].is_zero())
            m(pairs_[k].dst, pairs_[k].src) += p[k] * pairs_[k].scale;
    return m;
}

IntVector HomGroup::pair_coords(const IntMatrix& m) const
{
    IntVector p(pairs_.size());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        const HomPair& hp = pairs_[k];
        Integer x = m(hp.dst, hp.src);
        Integer e = b_.gen_order(hp.dst);
        if (!e.is_zero())
            x = mod(x, e);
        if (!divides(hp.scale, x))
            throw MalformedHom("matrix is not a well-defined hom");
        x = x / hp.scale;
        p[k] = hp.order.is_zero() ? x : mod(x, hp.order);
    }
    return p;
}

GroupHom HomGroup::element(const IntVector& canonical) const
{
    IntVector p(pairs_.size());
    for (std::size_t i = 0; i < canonical.size(); ++i) {
        if (canonical[i].is_zero())
            continue;
        IntVector r = quotient_.representative(i);
        for (std::size_t k = 0; k < p.size(); ++k)
            p[k] += canonical[i] * r[k];
    }
    return GroupHom(a_, b_, matrix_from_pairs(p));
}

std::vector<GroupHom> HomGroup::basis() const
{
    std::vector<GroupHom> out;
    for (std::size_t i = 0; i < group().ngens(); ++i) {
        IntVector e(group().ngens());
        e[i] = 1;
        out.push_back(element(e));
    }
    return out;
}

IntVector HomGroup::coords(const GroupHom& f) const
{
    return quotient_.coords(pair_coords(f.matrix()));
}

FGAbGroup hom_group(const FGAbGroup& a, const FGAbGroup& b)
{
    return HomGroup(a, b).group();
}

}  // namespace mss
