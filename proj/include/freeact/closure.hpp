#ifndef FREEACT_CLOSURE_HPP
#define FREEACT_CLOSURE_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "freeact/matrix.hpp"
#include "freeact/words.hpp"

namespace freeact {

struct MatrixOps {
  using Elt = UMatrix;
  unsigned dim;
  UMatrix identity() const { return UMatrix::identity(dim); }
  UMatrix mul(const UMatrix& a, const UMatrix& b) const { return a * b; }
  UMatrix inv(const UMatrix& a) const { return a.unitary_inverse(); }
  bool eq(const UMatrix& a, const UMatrix& b) const { return a == b; }
};

// Finite matrix group built as the breadth-first closure of a generator
// set. Every element carries a shortest word in the generators (indices
// into the generator list, -1-k meaning the inverse of generator k).
class FiniteMatrixGroup {
 public:
  // Throws InternalError if the closure exceeds `bound` elements (guards
  // against accidentally infinite groups).
  static FiniteMatrixGroup closure(const std::vector<UMatrix>& generators, size_t bound);

  size_t size() const { return elements_.size(); }
  const UMatrix& element(size_t idx) const { return elements_[idx]; }
  const std::vector<int>& word(size_t idx) const { return words_[idx]; }
  unsigned ambient_order() const { return ambient_order_; }

  // Index lookup by canonical key; -1 if absent.
  long index_of(const UMatrix& m) const;

  std::string word_string(size_t idx) const;

 private:
  std::vector<UMatrix> elements_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::string, size_t> index_;
  unsigned ambient_order_ = 1;
};

// Plain multiplication table of a finite group; the uniform carrier for
// rank and isomorphism searches.
class CayleyTable {
 public:
  CayleyTable(size_t n, std::vector<uint32_t> table, size_t identity_index);

  static CayleyTable from_matrix_group(const FiniteMatrixGroup& g);

  template <class Family>
  static CayleyTable from_family(const Family& fam) {
    auto elems = fam.elements();
    std::map<typename Family::Elt, size_t> idx;
    for (size_t i = 0; i < elems.size(); ++i) idx.emplace(elems[i], i);
    std::vector<uint32_t> table(elems.size() * elems.size());
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = 0; j < elems.size(); ++j)
        table[i * elems.size() + j] = static_cast<uint32_t>(idx.at(fam.mul(elems[i], elems[j])));
    return CayleyTable(elems.size(), std::move(table), idx.at(fam.identity()));
  }

  static CayleyTable cyclic(size_t n);

  size_t size() const { return n_; }
  size_t identity() const { return id_; }
  size_t mul(size_t a, size_t b) const { return table_[a * n_ + b]; }
  size_t inv(size_t a) const { return inv_[a]; }
  unsigned element_order(size_t a) const;
  bool commute(size_t a, size_t b) const { return mul(a, b) == mul(b, a); }

  // Subgroup generated by the given elements, as a sorted index list.
  std::vector<size_t> generated_subgroup(const std::vector<size_t>& gens) const;

 private:
  size_t n_;
  std::vector<uint32_t> table_;
  size_t id_;
  std::vector<uint32_t> inv_;
};

// Largest r such that (Z/p)^r embeds as a subgroup; exhaustive search over
// commuting tuples of order-p elements.
unsigned elementary_abelian_rank(const CayleyTable& g, unsigned p);

// True iff mapping G's generators to the given H-elements extends to an
// isomorphism: all G-relations hold in H and the images generate all of H.
// |G| must equal |H|.
template <class HFamily>
bool iso_check(const std::vector<Relation>& g_relations, unsigned long g_order,
               const std::map<std::string, typename HFamily::Elt>& images, const HFamily& h,
               const CayleyTable& h_table,
               const std::map<typename HFamily::Elt, size_t>& h_index) {
  if (g_order != h_table.size()) return false;
  if (!verify_relations(h, images, g_relations).ok()) return false;
  std::vector<size_t> gens;
  gens.reserve(images.size());
  for (const auto& [name, elt] : images) gens.push_back(h_index.at(elt));
  return h_table.generated_subgroup(gens).size() == h_table.size();
}

// The alternating group A4 as the closure of two even 4x4 permutation
// matrices. Returns the matrix group (order 12).
FiniteMatrixGroup build_a4();

// Searches A4 for images (u, v, w) satisfying the E(2) presentation and
// generating the whole group; deterministic scan order. Returns matrices.
struct E2A4Map {
  UMatrix u, v, w;
  bool found = false;
};
E2A4Map search_e2_map_in_a4(const FiniteMatrixGroup& a4);

}  // namespace freeact

#endif
