#pragma once

#include <vector>

#include "surfcover/cover.hpp"
#include "surfcover/errors.hpp"
#include "surfcover/lattice.hpp"
#include "surfcover/word.hpp"

namespace surfcover {

// Homology coordinates on a cover, built from a Schreier transversal.
//
// Fiber points are reached breadth-first from the basepoint in the letter
// order +1,-1,+2,-2,...; the tree edges give a transversal, every other
// (point, positive letter) pair contributes one free generator of the
// cover's fundamental group. Loops at the basepoint rewrite into those
// generators; homology classes come from reducing the rewritten relator
// columns to Smith normal form.
class CoverHomology {
 public:
  explicit CoverHomology(const PermCover& c) : cover_(c) {
    validate(c);
    int d = c.degree;
    int gens = generator_count(c.genus);
    transversal_.assign(static_cast<size_t>(d), Word{});
    gen_id_.assign(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(gens), 0));
    std::vector<bool> seen(static_cast<size_t>(d), false);
    std::vector<int> order{c.basepoint};
    seen[static_cast<size_t>(c.basepoint)] = true;
    // mark tree edges with -1 while exploring, then number the rest
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int j = order[qi];
      for (int k = 1; k <= gens; ++k) {
        for (int sgn : {+1, -1}) {
          int t = act(c, j, Word{sgn * k});
          if (seen[static_cast<size_t>(t)]) continue;
          seen[static_cast<size_t>(t)] = true;
          transversal_[static_cast<size_t>(t)] = transversal_[static_cast<size_t>(j)];
          transversal_[static_cast<size_t>(t)].push_back(sgn * k);
          int src = sgn > 0 ? j : t;  // tree edge stored at its positive end
          gen_id_[static_cast<size_t>(src)][static_cast<size_t>(k - 1)] = -1;
          order.push_back(t);
        }
      }
    }
    free_rank_ = 0;
    for (int j = 0; j < d; ++j)
      for (int k = 1; k <= gens; ++k)
        if (gen_id_[static_cast<size_t>(j)][static_cast<size_t>(k - 1)] == 0)
          gen_id_[static_cast<size_t>(j)][static_cast<size_t>(k - 1)] = ++free_rank_;
        else
          gen_id_[static_cast<size_t>(j)][static_cast<size_t>(k - 1)] = 0;

    // one rewritten relator per fiber point; their span is the relation
    // lattice of the cover group
    SurfaceGroup G(c.genus);
    lin::Mat rel;
    for (int j = 0; j < d; ++j) {
      Word loop = concat(transversal_[static_cast<size_t>(j)], G.relator());
      loop = concat(loop, inverse(transversal_[static_cast<size_t>(j)]));
      rel.push_back(rewrite_abelianized(loop));
    }
    relation_matrix_ = rel;
    lin::Snf s = lin::snf(rel);
    snf_rank_ = 0;
    for (size_t i = 0; i < s.d.size() && i < s.d[0].size(); ++i)
      if (s.d[i][i] != 0) {
        if (s.d[i][i] != 1 && s.d[i][i] != -1)
          throw CoverError("cover homology has unexpected torsion");
        ++snf_rank_;
      }
    if (free_rank_ - snf_rank_ != 2 * total_genus(c))
      throw CoverError("relation lattice rank is off");
    v_ = s.v;
  }

  const PermCover& cover() const { return cover_; }
  const Word& transversal(int j) const { return transversal_.at(static_cast<size_t>(j)); }
  int free_rank() const { return free_rank_; }
  int betti() const { return free_rank_ - snf_rank_; }
  const lin::Mat& relation_matrix() const { return relation_matrix_; }

  // 1-based id of the Schreier generator at (fiber point, positive letter),
  // or 0 on a tree edge.
  int generator_id(int j, int k) const {
    return gen_id_.at(static_cast<size_t>(j)).at(static_cast<size_t>(k - 1));
  }

  Word schreier_generator(int j, int k) const {
    Word w = transversal_.at(static_cast<size_t>(j));
    w.push_back(k);
    return free_reduce(concat(w, inverse(transversal_.at(static_cast<size_t>(act(cover_, j, Word{k}))))));
  }

  // Rewrite a basepoint loop as a sequence of signed generator ids.
  std::vector<int> rewrite(const Word& w) const {
    std::vector<int> out;
    int j = cover_.basepoint;
    for (Letter x : w) {
      int k = x > 0 ? x : -x;
      if (x > 0) {
        int id = gen_id_[static_cast<size_t>(j)][static_cast<size_t>(k - 1)];
        if (id != 0) out.push_back(id);
        j = act(cover_, j, Word{x});
      } else {
        j = act(cover_, j, Word{x});
        int id = gen_id_[static_cast<size_t>(j)][static_cast<size_t>(k - 1)];
        if (id != 0) out.push_back(-id);
      }
    }
    if (j != cover_.basepoint) throw CoverError("word does not lift to a basepoint loop");
    return out;
  }

  std::vector<lin::i64> rewrite_abelianized(const Word& w) const {
    std::vector<lin::i64> row(static_cast<size_t>(free_rank_), 0);
    for (int id : rewrite(w)) row[static_cast<size_t>((id > 0 ? id : -id) - 1)] += id > 0 ? 1 : -1;
    return row;
  }

  // Class of a basepoint loop in the free part of the cover's first
  // homology, a vector of length betti().
  std::vector<lin::i64> homology_class(const Word& w) const {
    lin::Mat prod = lin::matmul(lin::Mat{rewrite_abelianized(w)}, v_);
    return std::vector<lin::i64>(prod[0].begin() + snf_rank_, prod[0].end());
  }

 private:
  PermCover cover_;
  std::vector<Word> transversal_;
  std::vector<std::vector<int>> gen_id_;
  int free_rank_ = 0;
  int snf_rank_ = 0;
  lin::Mat relation_matrix_;
  lin::Mat v_;
};

}  // namespace surfcover
