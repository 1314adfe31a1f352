#pragma once

// Degree-truncated linear algebra for A = k{x,y,z}/(relations) with
// homogeneous relations.
//
// A_d is built from A_{d-1}:  A_d = (A_{d-1} (x) V) / K_d  where K_d is spanned
// by the images of w*r for standard words w of degree d - deg r.  The rows of
// K_d are kept in reduced row echelon form; non-pivot columns (b, v) give the
// standard words b*v spanning A_d, and normal forms of arbitrary words follow
// by the same recursion.  This never touches the full 3^d-dimensional ideal
// piece unless ideal_piece() is asked for it.

#include "skly3/error.hpp"
#include "skly3/field.hpp"
#include "skly3/ncpoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace skly3 {

/// Sparse vector: sorted (index, nonzero value) pairs.
template <Field F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Element>>;

/// Choices that affect which columns become pivots.  Dimensions and
/// membership answers must not depend on them.
struct TruncationOptions {
  std::array<int, 3> generator_rank{0, 1, 2};
  bool reverse_basis_order = false;
};

/// Row-reduced basis of the ideal piece I_d inside the span of the 3^d words.
/// Each row has a distinct pivot word (coefficient 1) and is otherwise
/// supported on standard words only.
template <Field F>
struct IdealPiece {
  std::size_t degree = 0;
  std::uint64_t ambient_dimension = 0;
  std::size_t rank = 0;
  std::vector<std::uint64_t> pivot_words;
  std::vector<SparseVec<F>> rows;
};

template <Field F>
class GradedTruncation {
public:
  using Element = typename F::Element;

  GradedTruncation(F field, std::vector<NcPoly<F>> relations, std::size_t max_degree,
                   TruncationOptions options = {})
      : field_(std::move(field)), relations_(std::move(relations)), max_degree_(max_degree), options_(options) {
    if (max_degree_ > 20) throw PreconditionError("truncation degree " + std::to_string(max_degree_) + " too large");
    for (const auto& r : relations_) {
      if (!r.is_homogeneous()) throw PreconditionError("inhomogeneous relation " + r.to_string());
      if (!r.is_zero() && *r.max_degree() == 0) throw PreconditionError("degree-0 relation");
    }
    degrees_.resize(max_degree_ + 1);
    degrees_[0].standard_words.push_back(Word());
    degrees_[0].normal_forms.emplace(0, SparseVec<F>{{0, field_.one()}});
    for (std::size_t d = 1; d <= max_degree_; ++d) build_degree(d);
  }

  const F& field() const { return field_; }
  std::size_t max_degree() const { return max_degree_; }
  const std::vector<NcPoly<F>>& relations() const { return relations_; }

  std::size_t dim(std::size_t d) const { return level(d).standard_words.size(); }

  std::vector<std::size_t> hilbert_function() const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d <= max_degree_; ++d) out.push_back(dim(d));
    return out;
  }

  std::uint64_t ideal_rank(std::size_t d) const { return pow3(d) - dim(d); }

  /// Words whose images form the chosen basis of A_d.
  const std::vector<Word>& standard_words(std::size_t d) const { return level(d).standard_words; }

  /// Coordinates of the image of w in the standard basis of A_{deg w}.
  SparseVec<F> normal_form(const Word& w) const {
    std::lock_guard lock(mutex_);
    return word_nf(w.degree(), w.index());
  }

  /// Coordinates of a homogeneous polynomial in A_{deg p}.
  SparseVec<F> normal_form(const NcPoly<F>& p) const {
    if (p.is_zero()) return {};
    require_homogeneous(p);
    const std::size_t d = *p.max_degree();
    check_degree(d);
    std::map<std::uint32_t, Element> acc;
    {
      std::lock_guard lock(mutex_);
      for (const auto& [w, c] : p.terms())
        for (const auto& [i, v] : word_nf(d, w.index())) accumulate(acc, i, c * v);
    }
    return to_sparse(acc);
  }

  bool contains(const NcPoly<F>& p) const { return normal_form(p).empty(); }

  /// [p, x], [p, y], [p, z] all vanish in A.  Since x, y, z generate, this is
  /// exact centrality, not a truncated statement.
  bool is_central(const NcPoly<F>& p) const {
    if (p.is_zero()) return true;
    require_homogeneous(p);
    const std::size_t d = *p.max_degree();
    if (d + 1 > max_degree_)
      throw PreconditionError("centrality of a degree-" + std::to_string(d) + " element needs truncation degree " +
                              std::to_string(d + 1) + ", have " + std::to_string(max_degree_));
    for (Gen g : all_generators) {
      const auto gen = NcPoly<F>::generator(field_, g);
      if (!contains(p * gen - gen * p)) return false;
    }
    return true;
  }

  IdealPiece<F> ideal_piece(std::size_t d) const {
    check_degree(d);
    IdealPiece<F> piece;
    piece.degree = d;
    piece.ambient_dimension = pow3(d);
    const auto& lv = level(d);
    std::vector<std::uint64_t> std_index;
    for (const auto& w : lv.standard_words) std_index.push_back(w.index());
    std::vector<bool> is_standard(piece.ambient_dimension, false);
    for (auto idx : std_index) is_standard[idx] = true;
    std::lock_guard lock(mutex_);
    for (std::uint64_t idx = 0; idx < piece.ambient_dimension; ++idx) {
      if (is_standard[idx]) continue;
      std::map<std::uint32_t, Element> row;
      row.emplace(static_cast<std::uint32_t>(idx), field_.one());
      for (const auto& [i, v] : word_nf(d, idx)) accumulate(row, static_cast<std::uint32_t>(std_index[i]), -v);
      piece.pivot_words.push_back(idx);
      piece.rows.push_back(to_sparse(row));
    }
    piece.rank = piece.rows.size();
    return piece;
  }

private:
  struct Level {
    std::vector<Word> standard_words;
    // pivot column -> reduced row (including the pivot entry, value 1)
    std::map<std::uint32_t, std::map<std::uint32_t, Element>> pivots;
    std::vector<std::int64_t> free_index; // column -> index in standard_words or -1
    std::unordered_map<std::uint64_t, SparseVec<F>> normal_forms;
  };

  static std::uint64_t pow3(std::size_t d) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < d; ++i) p *= 3;
    return p;
  }

  void accumulate(std::map<std::uint32_t, Element>& acc, std::uint32_t i, const Element& v) const {
    if (field_.is_zero(v)) return;
    auto [it, inserted] = acc.try_emplace(i, v);
    if (inserted) return;
    it->second = it->second + v;
    if (field_.is_zero(it->second)) acc.erase(it);
  }

  static SparseVec<F> to_sparse(const std::map<std::uint32_t, Element>& acc) {
    return SparseVec<F>(acc.begin(), acc.end());
  }

  void require_homogeneous(const NcPoly<F>& p) const {
    if (!p.is_homogeneous()) throw PreconditionError("inhomogeneous polynomial " + p.to_string());
  }

  void check_degree(std::size_t d) const {
    if (d > max_degree_)
      throw PreconditionError("degree " + std::to_string(d) + " exceeds truncation degree " +
                              std::to_string(max_degree_));
  }

  const Level& level(std::size_t d) const {
    check_degree(d);
    return degrees_[d];
  }

  std::uint64_t column_key(std::uint32_t col, std::size_t prev_dim) const {
    const std::uint64_t i = col / 3;
    const auto v = static_cast<std::uint64_t>(options_.generator_rank[col % 3]);
    const std::uint64_t ii = options_.reverse_basis_order ? prev_dim - 1 - i : i;
    return ii * 3 + v;
  }

  // Caller holds mutex_ (or is the constructor).
  const SparseVec<F>& word_nf(std::size_t d, std::uint64_t index) const {
    Level& lv = degrees_[d];
    if (auto it = lv.normal_forms.find(index); it != lv.normal_forms.end()) return it->second;
    const auto v = static_cast<std::uint32_t>(index % 3);
    const SparseVec<F> prefix = word_nf(d - 1, index / 3);
    std::map<std::uint32_t, Element> acc;
    for (const auto& [i, a] : prefix) {
      const std::uint32_t col = i * 3 + v;
      if (auto p = lv.pivots.find(col); p != lv.pivots.end()) {
        for (const auto& [c, r] : p->second)
          if (c != col) accumulate(acc, static_cast<std::uint32_t>(lv.free_index[c]), -(a * r));
      } else {
        accumulate(acc, static_cast<std::uint32_t>(lv.free_index[col]), a);
      }
    }
    return lv.normal_forms.emplace(index, to_sparse(acc)).first->second;
  }

  void insert_row(Level& lv, std::map<std::uint32_t, Element> row, std::size_t prev_dim) {
    std::vector<std::uint32_t> hits;
    for (const auto& [c, _] : row)
      if (lv.pivots.count(c)) hits.push_back(c);
    for (auto c : hits) {
      auto it = row.find(c);
      if (it == row.end()) continue;
      const Element f = it->second;
      for (const auto& [cc, rv] : lv.pivots.at(c)) accumulate(row, cc, -(f * rv));
    }
    if (row.empty()) return;
    std::uint32_t pivot = row.begin()->first;
    for (const auto& [c, _] : row)
      if (column_key(c, prev_dim) > column_key(pivot, prev_dim)) pivot = c;
    const Element inv = field_.one() / row.at(pivot);
    for (auto& [c, v] : row) v = v * inv;
    row[pivot] = field_.one();
    for (auto& [pc, prow] : lv.pivots) {
      auto it = prow.find(pivot);
      if (it == prow.end()) continue;
      const Element f = it->second;
      for (const auto& [c, v] : row) accumulate(prow, c, -(f * v));
    }
    lv.pivots.emplace(pivot, std::move(row));
  }

  void build_degree(std::size_t d) {
    Level& lv = degrees_[d];
    const std::size_t prev_dim = degrees_[d - 1].standard_words.size();
    for (const auto& r : relations_) {
      if (r.is_zero()) continue;
      const std::size_t k = *r.max_degree();
      if (k > d) continue;
      for (const Word& w : degrees_[d - k].standard_words) {
        std::map<std::uint32_t, Element> row;
        for (const auto& [u, c] : r.terms()) {
          std::vector<Gen> head = w.letters();
          head.insert(head.end(), u.letters().begin(), u.letters().end() - 1);
          const Word prefix(std::move(head));
          const auto v = static_cast<std::uint32_t>(u.letters().back());
          for (const auto& [i, a] : word_nf(d - 1, prefix.index())) accumulate(row, i * 3 + v, c * a);
        }
        if (!row.empty()) insert_row(lv, std::move(row), prev_dim);
      }
    }
    const auto ncols = static_cast<std::uint32_t>(prev_dim * 3);
    lv.free_index.assign(ncols, -1);
    for (std::uint32_t col = 0; col < ncols; ++col) {
      if (lv.pivots.count(col)) continue;
      lv.free_index[col] = static_cast<std::int64_t>(lv.standard_words.size());
      lv.standard_words.push_back(degrees_[d - 1].standard_words[col / 3] * Word{static_cast<Gen>(col % 3)});
    }
  }

  F field_;
  std::vector<NcPoly<F>> relations_;
  std::size_t max_degree_;
  TruncationOptions options_;
  mutable std::vector<Level> degrees_;
  mutable std::mutex mutex_;
};

/// Row-reduced basis of the degree-d part of the ideal generated by relations.
template <Field F>
IdealPiece<F> ideal_piece(const F& field, const std::vector<NcPoly<F>>& relations, std::size_t d) {
  return GradedTruncation<F>(field, relations, d).ideal_piece(d);
}

template <Field F>
std::vector<std::size_t> hilbert_function(const F& field, const std::vector<NcPoly<F>>& relations,
                                          std::size_t max_degree) {
  return GradedTruncation<F>(field, relations, max_degree).hilbert_function();
}

template <Field F>
bool contains(const NcPoly<F>& p, const std::vector<NcPoly<F>>& relations) {
  if (p.is_zero()) return true;
  return GradedTruncation<F>(p.field(), relations, *p.max_degree()).contains(p);
}

template <Field F>
bool is_central(const NcPoly<F>& p, const std::vector<NcPoly<F>>& relations) {
  if (p.is_zero()) return true;
  return GradedTruncation<F>(p.field(), relations, *p.max_degree() + 1).is_central(p);
}

template <Field F>
std::vector<NcPoly<F>> relation_list(const ParameterTriple<F>& params) {
  auto rels = sklyanin_relations(params);
  return {rels.begin(), rels.end()};
}

/// Graded dimensions of S/Sg, where g is the central cubic of the triple.
template <Field F>
std::vector<std::size_t> quotient_dims_mod_g(const ParameterTriple<F>& params, std::size_t max_degree) {
  auto rels = relation_list(params);
  rels.push_back(central_g(params));
  return GradedTruncation<F>(params.field(), rels, max_degree).hilbert_function();
}

} // namespace skly3
