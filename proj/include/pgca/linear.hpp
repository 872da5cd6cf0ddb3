#pragma once

#include "pgca/element.hpp"
#include "pgca/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace pgca {

/// Sparse vector over Q(i): entries sorted by index, zeros never stored.
class SparseVector {
  public:
    using Entry = std::pair<std::size_t, GaussianRational>;

    SparseVector() = default;

    /// Appends an entry; indices must arrive strictly increasing.
    void push_back(std::size_t index, GaussianRational value);
    /// Random-order insertion (accumulates into existing entries).
    void add(std::size_t index, const GaussianRational &value);

    const std::vector<Entry> &entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    std::size_t leading_index() const { return entries_.front().first; }
    const GaussianRational &leading_value() const { return entries_.front().second; }
    GaussianRational at(std::size_t index) const;

    /// this += factor * other
    void axpy(const GaussianRational &factor, const SparseVector &other);
    SparseVector &operator*=(const GaussianRational &c);

    friend bool operator==(const SparseVector &, const SparseVector &) = default;

  private:
    std::vector<Entry> entries_;
};

/// Incremental exact Gaussian elimination kept in reduced row echelon form.
///
/// The pivot of every row is its smallest column index, so the final basis
/// depends only on the row space, never on insertion order.
class Echelon {
  public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Reduces `row` against the current pivots.
    SparseVector reduce(SparseVector row) const;
    bool contains(const SparseVector &row) const { return reduce(row).is_zero(); }

    /// Adds a row; returns true if the rank grew.
    bool add(SparseVector row);
    /// Adds an already reduced nonzero row.
    void insert_reduced(SparseVector row);

    /// RREF rows ordered by pivot column.
    std::vector<SparseVector> rows() const;
    std::vector<std::size_t> pivots() const;

    /// Basis of {v : row . v = 0 for every row} restricted to columns
    /// [0, limit); one vector per free column, ascending.
    std::vector<SparseVector> nullspace(std::optional<std::size_t> limit = std::nullopt) const;

  private:
    std::size_t cols_;
    std::map<std::size_t, SparseVector> rows_;
};

/// Affine solution set: particular (free variables zero) + span(homogeneous).
struct AffineSolution {
    SparseVector particular;
    std::vector<SparseVector> homogeneous;
};

/// Linear system A x = b assembled row by row.
class AffineSystem {
  public:
    explicit AffineSystem(std::size_t unknowns) : unknowns_(unknowns), echelon_(unknowns + 1) {}

    void add_equation(SparseVector lhs, const GaussianRational &rhs);
    bool consistent() const noexcept { return consistent_; }
    /// nullopt when inconsistent.
    std::optional<AffineSolution> solve() const;

  private:
    std::size_t unknowns_;
    Echelon echelon_;
    bool consistent_ = true;
};

/// RREF basis of the row space spanned by `vectors`.
std::vector<SparseVector> row_space_basis(const std::vector<SparseVector> &vectors, std::size_t cols);

/// Basis (RREF) of span(a) ∩ span(b), by the Zassenhaus sum-intersection scheme.
std::vector<SparseVector> intersect_spans(const std::vector<SparseVector> &a, const std::vector<SparseVector> &b,
                                          std::size_t cols);

/// Coordinates for finite sets of generators, indexed in generator order.
class GeneratorIndex {
  public:
    GeneratorIndex() = default;
    explicit GeneratorIndex(std::vector<Generator> gens);
    /// Every generator appearing in any of the elements.
    static GeneratorIndex covering(const std::vector<Element> &elements);
    /// All four families of `basis` with degrees in [-radius, radius].
    static GeneratorIndex window(std::int64_t radius, Basis basis = Basis::Plain);

    std::size_t size() const noexcept { return gens_.size(); }
    const Generator &at(std::size_t i) const { return gens_.at(i); }
    std::optional<std::size_t> find(const Generator &g) const;

    /// Throws Error(OutOfWindow) if x has a generator outside the index.
    SparseVector coordinates(const Element &x) const;
    Element element(const SparseVector &v, Basis basis = Basis::Plain) const;

  private:
    std::vector<Generator> gens_;
};

/// Canonical (RREF) basis of the span of some elements.
std::vector<Element> span_basis(const std::vector<Element> &elements);
/// Canonical basis of span(a) ∩ span(b).
std::vector<Element> intersect_element_spans(const std::vector<Element> &a, const std::vector<Element> &b);
/// True iff x lies in span(elements).
bool span_contains(const std::vector<Element> &elements, const Element &x);

} // namespace pgca
