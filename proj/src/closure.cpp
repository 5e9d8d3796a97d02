#include "freeact/closure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace freeact {

FiniteMatrixGroup FiniteMatrixGroup::closure(const std::vector<UMatrix>& generators, size_t bound) {
  if (generators.empty()) throw PreconditionError("closure needs at least one generator");
  FiniteMatrixGroup g;
  unsigned dim = generators[0].dim();
  unsigned ambient = 1;
  for (const auto& m : generators) {
    if (m.dim() != dim) throw PreconditionError("generators of mixed dimension");
    if (!m.is_unitary()) throw PreconditionError("closure requires exact unitary generators");
    for (unsigned r = 0; r < dim; ++r)
      for (unsigned c = 0; c < dim; ++c) ambient = std::lcm(ambient, m.at(r, c).order());
  }
  g.ambient_order_ = ambient;

  auto push = [&](UMatrix m, std::vector<int> word) -> bool {
    std::string key = m.canonical_key(ambient);
    if (g.index_.contains(key)) return false;
    g.index_.emplace(std::move(key), g.elements_.size());
    g.elements_.push_back(std::move(m));
    g.words_.push_back(std::move(word));
    if (g.elements_.size() > bound) {
      std::ostringstream msg;
      msg << "group closure exceeded bound " << bound
          << " elements; generators may span an infinite group";
      throw InternalError(msg.str());
    }
    return true;
  };

  push(UMatrix::identity(dim), {});
  std::deque<size_t> frontier{0};
  while (!frontier.empty()) {
    size_t idx = frontier.front();
    frontier.pop_front();
    UMatrix current = g.elements_[idx];  // copy: push may reallocate
    const std::vector<int> word = g.words_[idx];
    for (size_t k = 0; k < generators.size(); ++k) {
      UMatrix next = current * generators[k];
      std::vector<int> next_word = word;
      next_word.push_back(static_cast<int>(k));
      if (push(std::move(next), std::move(next_word))) frontier.push_back(g.elements_.size() - 1);
    }
  }
  return g;
}

long FiniteMatrixGroup::index_of(const UMatrix& m) const {
  auto it = index_.find(m.canonical_key(ambient_order_));
  if (it == index_.end()) return -1;
  return static_cast<long>(it->second);
}

std::string FiniteMatrixGroup::word_string(size_t idx) const {
  const auto& w = words_[idx];
  if (w.empty()) return "e";
  std::ostringstream out;
  for (int g : w) out << 'g' << g;
  return out.str();
}

CayleyTable::CayleyTable(size_t n, std::vector<uint32_t> table, size_t identity_index)
    : n_(n), table_(std::move(table)), id_(identity_index), inv_(n) {
  for (size_t a = 0; a < n_; ++a) {
    bool found = false;
    for (size_t b = 0; b < n_; ++b) {
      if (mul(a, b) == id_) {
        inv_[a] = static_cast<uint32_t>(b);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("multiplication table has an element without inverse");
  }
}

CayleyTable CayleyTable::from_matrix_group(const FiniteMatrixGroup& g) {
  size_t n = g.size();
  std::vector<uint32_t> table(n * n);
  size_t id = 0;
  for (size_t i = 0; i < n; ++i) {
    if (g.element(i).is_identity()) id = i;
    for (size_t j = 0; j < n; ++j) {
      long idx = g.index_of(g.element(i) * g.element(j));
      if (idx < 0) throw InternalError("matrix group not closed under multiplication");
      table[i * n + j] = static_cast<uint32_t>(idx);
    }
  }
  return CayleyTable(n, std::move(table), id);
}

CayleyTable CayleyTable::cyclic(size_t n) {
  std::vector<uint32_t> table(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<uint32_t>((i + j) % n);
  return CayleyTable(n, std::move(table), 0);
}

unsigned CayleyTable::element_order(size_t a) const {
  size_t acc = a;
  unsigned t = 1;
  while (acc != id_) {
    acc = mul(acc, a);
    ++t;
    if (t > n_) throw InternalError("element order exceeds group order");
  }
  return t;
}

std::vector<size_t> CayleyTable::generated_subgroup(const std::vector<size_t>& gens) const {
  std::vector<char> seen(n_, 0);
  std::deque<size_t> frontier;
  seen[id_] = 1;
  frontier.push_back(id_);
  while (!frontier.empty()) {
    size_t x = frontier.front();
    frontier.pop_front();
    for (size_t gidx : gens) {
      for (size_t y : {mul(x, gidx), mul(x, inv(gidx))}) {
        if (!seen[y]) {
          seen[y] = 1;
          frontier.push_back(y);
        }
      }
    }
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < n_; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

namespace {

// Backtracking extension: chain holds pairwise-commuting order-p elements
// generating (Z/p)^depth; span is that subgroup's index set (sorted).
unsigned extend_rank(const CayleyTable& g, const std::vector<size_t>& order_p,
                     std::vector<size_t>& chain, std::vector<size_t>& span, unsigned depth) {
  unsigned best = depth;
  for (size_t cand : order_p) {
    if (!chain.empty() && cand <= chain.back()) continue;  // canonical order
    if (std::binary_search(span.begin(), span.end(), cand)) continue;
    bool commutes = true;
    for (size_t c : chain) {
      if (!g.commute(cand, c)) {
        commutes = false;
        break;
      }
    }
    if (!commutes) continue;
    std::vector<size_t> new_span;
    unsigned p = g.element_order(cand);
    new_span.reserve(span.size() * p);
    size_t power = g.identity();
    for (unsigned t = 0; t < p; ++t) {
      for (size_t s : span) new_span.push_back(g.mul(s, power));
      power = g.mul(power, cand);
    }
    std::sort(new_span.begin(), new_span.end());
    new_span.erase(std::unique(new_span.begin(), new_span.end()), new_span.end());
    if (new_span.size() != span.size() * p)
      throw InternalError("elementary abelian span did not grow by a factor of p");
    chain.push_back(cand);
    best = std::max(best, extend_rank(g, order_p, chain, new_span, depth + 1));
    chain.pop_back();
  }
  return best;
}

}  // namespace

unsigned elementary_abelian_rank(const CayleyTable& g, unsigned p) {
  std::vector<size_t> order_p;
  for (size_t i = 0; i < g.size(); ++i)
    if (g.element_order(i) == p) order_p.push_back(i);
  if (order_p.empty()) return 0;
  std::vector<size_t> chain;
  std::vector<size_t> span{g.identity()};
  return extend_rank(g, order_p, chain, span, 0);
}

FiniteMatrixGroup build_a4() {
  // (1 2)(3 4) and (1 2 3) as 0-based permutation matrices.
  UMatrix dbl = UMatrix::permutation({1, 0, 3, 2});
  UMatrix cyc = UMatrix::permutation({1, 2, 0, 3});
  auto g = FiniteMatrixGroup::closure({dbl, cyc}, 64);
  if (g.size() != 12) throw InternalError("A4 closure produced wrong order");
  return g;
}

E2A4Map search_e2_map_in_a4(const FiniteMatrixGroup& a4) {
  EpFamily e2(2);
  auto relations = e2.relations();
  MatrixOps ops{4};
  CayleyTable table = CayleyTable::from_matrix_group(a4);
  for (size_t iu = 0; iu < a4.size(); ++iu) {
    for (size_t iv = 0; iv < a4.size(); ++iv) {
      for (size_t iw = 0; iw < a4.size(); ++iw) {
        std::map<std::string, UMatrix> images{
            {"u", a4.element(iu)}, {"v", a4.element(iv)}, {"w", a4.element(iw)}};
        if (!verify_relations(ops, images, relations).ok()) continue;
        if (table.generated_subgroup({iu, iv, iw}).size() != a4.size()) continue;
        return {a4.element(iu), a4.element(iv), a4.element(iw), true};
      }
    }
  }
  return {};
}

}  // namespace freeact
