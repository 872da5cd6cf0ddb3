#include "pgca/linear.hpp"

#include "pgca/error.hpp"

#include <algorithm>
#include <set>

namespace pgca {

void SparseVector::push_back(std::size_t index, GaussianRational value)
{
    if (value.is_zero())
        return;
    entries_.emplace_back(index, std::move(value));
}

void SparseVector::add(std::size_t index, const GaussianRational &value)
{
    if (value.is_zero())
        return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry &e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) {
        it->second += value;
        if (it->second.is_zero())
            entries_.erase(it);
    } else {
        entries_.insert(it, Entry{index, value});
    }
}

GaussianRational SparseVector::at(std::size_t index) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry &e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index)
        return it->second;
    return {};
}

void SparseVector::axpy(const GaussianRational &factor, const SparseVector &other)
{
    if (factor.is_zero() || other.is_zero())
        return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a));
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            merged.emplace_back(b->first, factor * b->second);
            ++b;
        } else {
            GaussianRational v = std::move(a->second);
            v += factor * b->second;
            if (!v.is_zero())
                merged.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
}

SparseVector &SparseVector::operator*=(const GaussianRational &c)
{
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto &e : entries_)
        e.second *= c;
    return *this;
}

SparseVector Echelon::reduce(SparseVector row) const
{
    std::vector<std::pair<std::size_t, GaussianRational>> factors;
    for (const auto &[col, v] : row.entries())
        if (rows_.count(col))
            factors.emplace_back(col, v);
    for (const auto &[col, v] : factors)
        row.axpy(-v, rows_.at(col));
    return row;
}

bool Echelon::add(SparseVector row)
{
    row = reduce(std::move(row));
    if (row.is_zero())
        return false;
    insert_reduced(std::move(row));
    return true;
}

void Echelon::insert_reduced(SparseVector row)
{
    const std::size_t pivot = row.leading_index();
    if (!(row.leading_value() == GaussianRational(1)))
        row *= row.leading_value().inverse();
    for (auto &[p, existing] : rows_) {
        GaussianRational c = existing.at(pivot);
        if (!c.is_zero())
            existing.axpy(-c, row);
    }
    rows_.emplace(pivot, std::move(row));
}

std::vector<SparseVector> Echelon::rows() const
{
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto &[p, r] : rows_)
        out.push_back(r);
    return out;
}

std::vector<std::size_t> Echelon::pivots() const
{
    std::vector<std::size_t> out;
    for (const auto &[p, r] : rows_)
        out.push_back(p);
    return out;
}

std::vector<SparseVector> Echelon::nullspace(std::optional<std::size_t> limit) const
{
    const std::size_t lim = limit.value_or(cols_);
    std::map<std::size_t, std::vector<SparseVector::Entry>> by_free;
    for (std::size_t c = 0; c < lim; ++c)
        if (!rows_.count(c))
            by_free[c].emplace_back(c, GaussianRational(1));
    for (const auto &[p, r] : rows_) {
        if (p >= lim)
            continue;
        for (const auto &[col, v] : r.entries()) {
            if (col == p || col >= lim)
                continue;
            by_free[col].emplace_back(p, -v);
        }
    }
    std::vector<SparseVector> out;
    out.reserve(by_free.size());
    for (auto &[f, entries] : by_free) {
        std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        SparseVector v;
        for (auto &[i, x] : entries)
            v.push_back(i, std::move(x));
        out.push_back(std::move(v));
    }
    return out;
}

void AffineSystem::add_equation(SparseVector lhs, const GaussianRational &rhs)
{
    if (!consistent_)
        return;
    lhs.push_back(unknowns_, rhs);
    SparseVector r = echelon_.reduce(std::move(lhs));
    if (r.is_zero())
        return;
    if (r.leading_index() == unknowns_) {
        consistent_ = false;
        return;
    }
    echelon_.insert_reduced(std::move(r));
}

std::optional<AffineSolution> AffineSystem::solve() const
{
    if (!consistent_)
        return std::nullopt;
    AffineSolution sol;
    for (const auto &r : echelon_.rows()) {
        GaussianRational b = r.at(unknowns_);
        sol.particular.push_back(r.leading_index(), b);
    }
    sol.homogeneous = echelon_.nullspace(unknowns_);
    return sol;
}

std::vector<SparseVector> row_space_basis(const std::vector<SparseVector> &vectors, std::size_t cols)
{
    Echelon e(cols);
    for (const auto &v : vectors)
        e.add(v);
    return e.rows();
}

std::vector<SparseVector> intersect_spans(const std::vector<SparseVector> &a, const std::vector<SparseVector> &b,
                                          std::size_t cols)
{
    // Rows (u, u) for u in a and (v, 0) for v in b; after elimination the rows
    // whose left half vanished carry a basis of the intersection on the right.
    Echelon e(2 * cols);
    for (const auto &u : a) {
        SparseVector row = u;
        for (const auto &[i, x] : u.entries())
            row.push_back(cols + i, x);
        e.add(std::move(row));
    }
    for (const auto &v : b)
        e.add(v);
    std::vector<SparseVector> shifted;
    for (const auto &r : e.rows()) {
        if (r.leading_index() < cols)
            continue;
        SparseVector s;
        for (const auto &[i, x] : r.entries())
            s.push_back(i - cols, x);
        shifted.push_back(std::move(s));
    }
    return row_space_basis(shifted, cols);
}

GeneratorIndex::GeneratorIndex(std::vector<Generator> gens) : gens_(std::move(gens))
{
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

GeneratorIndex GeneratorIndex::covering(const std::vector<Element> &elements)
{
    std::set<Generator> seen;
    for (const auto &x : elements)
        for (const auto &[g, c] : x.terms())
            seen.insert(g);
    return GeneratorIndex(std::vector<Generator>(seen.begin(), seen.end()));
}

GeneratorIndex GeneratorIndex::window(std::int64_t radius, Basis basis)
{
    std::vector<Generator> gens;
    for (Family f : kFamilies)
        for (std::int64_t m = -radius; m <= radius; ++m)
            gens.push_back({basis, f, m});
    return GeneratorIndex(std::move(gens));
}

std::optional<std::size_t> GeneratorIndex::find(const Generator &g) const
{
    auto it = std::lower_bound(gens_.begin(), gens_.end(), g);
    if (it == gens_.end() || !(*it == g))
        return std::nullopt;
    return static_cast<std::size_t>(it - gens_.begin());
}

SparseVector GeneratorIndex::coordinates(const Element &x) const
{
    SparseVector v;
    for (const auto &[g, c] : x.terms()) {
        auto i = find(g);
        if (!i)
            throw Error(ErrorCode::OutOfWindow, "element leaves the coordinate window");
        v.push_back(*i, c); // map order == index order
    }
    return v;
}

Element GeneratorIndex::element(const SparseVector &v, Basis basis) const
{
    Element out(basis);
    for (const auto &[i, c] : v.entries())
        out.add_term(c, gens_.at(i));
    return out;
}

namespace {

template <class F>
auto with_coordinates(const std::vector<Element> &all, F &&f)
{
    GeneratorIndex index = GeneratorIndex::covering(all);
    Basis basis = Basis::Plain;
    for (const auto &x : all)
        if (!x.is_zero()) {
            basis = x.basis();
            break;
        }
    return f(index, basis);
}

std::vector<SparseVector> coords(const GeneratorIndex &index, const std::vector<Element> &xs)
{
    std::vector<SparseVector> out;
    out.reserve(xs.size());
    for (const auto &x : xs)
        out.push_back(index.coordinates(x));
    return out;
}

std::vector<Element> elements(const GeneratorIndex &index, const std::vector<SparseVector> &vs, Basis basis)
{
    std::vector<Element> out;
    out.reserve(vs.size());
    for (const auto &v : vs)
        out.push_back(index.element(v, basis));
    return out;
}

} // namespace

std::vector<Element> span_basis(const std::vector<Element> &xs)
{
    return with_coordinates(xs, [&](const GeneratorIndex &index, Basis basis) {
        return elements(index, row_space_basis(coords(index, xs), index.size()), basis);
    });
}

std::vector<Element> intersect_element_spans(const std::vector<Element> &a, const std::vector<Element> &b)
{
    std::vector<Element> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return with_coordinates(all, [&](const GeneratorIndex &index, Basis basis) {
        return elements(index, intersect_spans(coords(index, a), coords(index, b), index.size()), basis);
    });
}

bool span_contains(const std::vector<Element> &xs, const Element &x)
{
    std::vector<Element> all = xs;
    all.push_back(x);
    return with_coordinates(all, [&](const GeneratorIndex &index, Basis) {
        Echelon e(index.size());
        for (const auto &v : coords(index, xs))
            e.add(v);
        return e.contains(index.coordinates(x));
    });
}

} // namespace pgca
