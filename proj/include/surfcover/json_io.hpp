#pragma once

#include <cctype>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfcover/abelian.hpp"
#include "surfcover/cover.hpp"
#include "surfcover/curve_graph.hpp"
#include "surfcover/errors.hpp"
#include "surfcover/finite_group.hpp"
#include "surfcover/word.hpp"

// JSON documents for covers, abelian covers, finite groups, inventories
// and graph fragments. Documents use 1-based fiber indices and disjoint
// cycle notation; everything internal stays 0-based. Words travel as
// strings in the "a1 b1 A1 B1" format of parse_word / format_word.

namespace surfcover {

using nlohmann::json;

inline json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void save_json(const std::string& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << doc.dump(2) << '\n';
}

namespace detail {

inline const json& need(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

}  // namespace detail

// { genus, degree, monodromy: { "a1": [[1-based cycle], ...], ... },
//   basepoint }. Omitted generators act as the identity; basepoint
// defaults to 1.
inline PermCover cover_from_json(const json& doc) {
  try {
    int genus = detail::need(doc, "genus").get<int>();
    int degree = detail::need(doc, "degree").get<int>();
    if (genus < 0 || degree < 0) throw ParseError("genus and degree must be nonnegative");
    PermCover c{genus, degree,
                std::vector<Perm>(static_cast<size_t>(2 * genus), identity_perm(degree)), 0};
    const json& mono = detail::need(doc, "monodromy");
    if (!mono.is_object()) throw ParseError("monodromy must be an object");
    for (auto it = mono.begin(); it != mono.end(); ++it) {
      Word name;
      try {
        name = parse_word(it.key());
      } catch (const std::invalid_argument&) {
      }
      if (name.size() != 1 || name[0] < 0)
        throw ParseError("bad generator name: " + it.key());
      Letter l = name[0];
      if (l > 2 * genus) throw ParseError("generator beyond genus: " + it.key());
      Perm p = identity_perm(degree);
      std::vector<bool> used(static_cast<size_t>(degree), false);
      for (const json& cyc : it.value()) {
        std::vector<int> idx;
        for (const json& v : cyc) {
          int x = v.get<int>();
          if (x < 1 || x > degree)
            throw CoverError("fiber index out of range in cycle notation");
          if (used[static_cast<size_t>(x - 1)])
            throw CoverError("fiber index repeated in cycle notation");
          used[static_cast<size_t>(x - 1)] = true;
          idx.push_back(x - 1);
        }
        for (size_t k = 0; k < idx.size(); ++k)
          p[static_cast<size_t>(idx[k])] = idx[(k + 1) % idx.size()];
      }
      c.monodromy[static_cast<size_t>(l - 1)] = std::move(p);
    }
    c.basepoint = doc.value("basepoint", 1) - 1;
    return c;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

inline json cover_to_json(const PermCover& c) {
  json mono = json::object();
  for (size_t gi = 0; gi < c.monodromy.size(); ++gi) {
    json cycles = json::array();
    for (const std::vector<int>& cyc : cycles_of(c.monodromy[gi])) {
      if (cyc.size() < 2) continue;
      json one = json::array();
      for (int x : cyc) one.push_back(x + 1);
      cycles.push_back(std::move(one));
    }
    if (!cycles.empty())
      mono[letter_name(static_cast<Letter>(gi + 1))] = std::move(cycles);
  }
  return json{{"genus", c.genus},
              {"degree", c.degree},
              {"monodromy", std::move(mono)},
              {"basepoint", c.basepoint + 1}};
}

// { genus, invariant_factors: [d1, ...], matrix: rows of length 2g }
inline AbelianCover abelian_from_json(const json& doc) {
  try {
    int genus = detail::need(doc, "genus").get<int>();
    std::vector<lin::i64> factors =
        detail::need(doc, "invariant_factors").get<std::vector<lin::i64>>();
    lin::Mat matrix = detail::need(doc, "matrix").get<lin::Mat>();
    return make_abelian_cover(genus, std::move(factors), std::move(matrix));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

inline json abelian_to_json(const AbelianCover& c) {
  return json{{"genus", c.genus},
              {"invariant_factors", c.invariant_factors},
              {"matrix", c.matrix}};
}

// { order, table: [[...]], labels: [...] }. Table entries are 0-based
// element indices; labels are optional.
inline FiniteGroup group_from_json(const json& doc) {
  try {
    int order = detail::need(doc, "order").get<int>();
    FiniteGroup G;
    G.table = detail::need(doc, "table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(G.table.size()) != order)
      throw ParseError("order does not match the table size");
    if (doc.contains("labels")) G.labels = doc["labels"].get<std::vector<std::string>>();
    return G;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

inline json group_to_json(const FiniteGroup& G) {
  json doc{{"order", G.order()}, {"table", G.table}};
  if (!G.labels.empty()) doc["labels"] = G.labels;
  return doc;
}

// { genus, words: ["a1b1", ...] } with cached counts alongside:
// self: [...], pairs: [[...]] (full symmetric matrix, diagonal = self).
inline json inventory_to_json(const CurveInventory& inv) {
  json words = json::array();
  for (const Word& w : inv.words) words.push_back(format_word(w));
  return json{{"genus", inv.genus},
              {"words", std::move(words)},
              {"self", inv.self_counts},
              {"pairs", inv.pair_counts}};
}

inline std::vector<Word> words_from_json(const json& doc) {
  try {
    std::vector<Word> out;
    for (const json& w : detail::need(doc, "words")) out.push_back(parse_word(w.get<std::string>()));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline CurveInventory inventory_from_json(const json& doc) {
  try {
    CurveInventory inv;
    inv.genus = detail::need(doc, "genus").get<int>();
    inv.words = words_from_json(doc);
    inv.self_counts = detail::need(doc, "self").get<std::vector<int>>();
    inv.pair_counts = detail::need(doc, "pairs").get<std::vector<std::vector<int>>>();
    size_t n = inv.words.size();
    if (inv.self_counts.size() != n || inv.pair_counts.size() != n)
      throw ParseError("inventory caches do not match the word count");
    for (const std::vector<int>& row : inv.pair_counts)
      if (row.size() != n) throw ParseError("inventory pair cache is ragged");
    return inv;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

inline json graph_to_json(const GammaGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
  return json{{"k", g.k}, {"j", g.j}, {"vertices", g.vertices}, {"edges", std::move(edges)}};
}

}  // namespace surfcover
