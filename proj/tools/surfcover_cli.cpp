// Command line front end: loads JSON documents, runs the library
// operations, and prints text tables or machine readable JSON.
//
// Exit codes: 0 success / positive verdict, 1 domain failure or negative
// verdict, 2 unreadable or malformed input, 3 precision exhausted.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surfcover/fuchsian.hpp"
#include "surfcover/gassmann.hpp"
#include "surfcover/intersect.hpp"
#include "surfcover/json_io.hpp"
#include "surfcover/maungchang.hpp"

namespace {

using namespace surfcover;
using nlohmann::json;

struct Emit {
  std::string format = "text";
  std::string out;
  int seed = 0;

  void operator()(json doc, const std::string& text) const {
    doc["seed"] = seed;
    std::string payload = format == "json" ? doc.dump(2) + "\n" : text;
    if (out.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream f(out);
    if (!f) throw ParseError("cannot write " + out);
    f << payload;
  }
};

Word cli_word(const std::string& s) {
  try {
    return parse_word(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string reason_name(const std::string& msg) {
  auto has = [&](const char* s) { return msg.find(s) != std::string::npos; };
  if (has("relator")) return "RelatorNotTrivial";
  if (has("not transitive") || has("disconnected")) return "NotTransitive";
  if (has("not a permutation") || has("degree mismatch")) return "BadPermutation";
  if (has("basepoint")) return "BadBasepoint";
  if (has("fiber index")) return "BadCycle";
  if (has("surjective")) return "NotSurjective";
  return "InvalidDocument";
}

int cmd_validate(const std::string& path, const Emit& emit) {
  json doc = load_json(path);
  std::string kind = "document";
  try {
    json report;
    std::ostringstream text;
    if (doc.contains("monodromy")) {
      kind = "cover";
      PermCover c = cover_from_json(doc);
      validate(c);
      report = {{"valid", true}, {"kind", kind},          {"genus", c.genus},
                {"degree", c.degree}, {"total_genus", total_genus(c)}};
      text << "valid cover document: genus " << c.genus << ", degree " << c.degree
           << ", total space genus " << total_genus(c) << "\n";
    } else if (doc.contains("invariant_factors")) {
      kind = "abelian";
      AbelianCover a = abelian_from_json(doc);
      report = {{"valid", true}, {"kind", kind}, {"genus", a.genus}, {"degree", deck_order(a)}};
      text << "valid abelian cover document: genus " << a.genus << ", degree " << deck_order(a)
           << "\n";
    } else if (doc.contains("table")) {
      kind = "group";
      FiniteGroup G = group_from_json(doc);
      validate(G);
      report = {{"valid", true}, {"kind", kind}, {"order", G.order()}};
      text << "valid group document: order " << G.order() << "\n";
    } else {
      throw ParseError("unrecognized document; expected cover, abelian cover, or group fields");
    }
    emit(report, text.str());
    return 0;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    std::string reason = reason_name(e.what());
    emit(json{{"valid", false}, {"kind", kind}, {"reason", reason}, {"detail", e.what()}},
         "invalid " + kind + " document: " + reason + " (" + e.what() + ")\n");
    return 1;
  }
}

int cmd_elevations(const std::string& path, const std::string& word_str, const Emit& emit) {
  PermCover c = cover_from_json(load_json(path));
  validate(c);
  Word w = cli_word(word_str);
  std::vector<Elevation> els = elevations(c, w);
  int nf = min_elevation_degree(c, w);
  json rows = json::array();
  std::ostringstream text;
  text << "degree  fiber cycle\n";
  for (const Elevation& e : els) {
    json cyc = json::array();
    text << "  " << e.degree() << "     (";
    for (size_t i = 0; i < e.fiber_cycle.size(); ++i) {
      cyc.push_back(e.fiber_cycle[i] + 1);
      text << (i ? " " : "") << e.fiber_cycle[i] + 1;
    }
    text << ")\n";
    rows.push_back({{"degree", e.degree()}, {"cycle", std::move(cyc)}});
  }
  text << "minimal elevation degree = " << nf << "\n";
  emit(json{{"word", format_word(w)}, {"elevations", std::move(rows)}, {"min_degree", nf}},
       text.str());
  return 0;
}

int cmd_abelian_equiv(const std::string& p1, const std::string& p2, int bound,
                      const Emit& emit) {
  AbelianCover a = abelian_from_json(load_json(p1));
  AbelianCover b = abelian_from_json(load_json(p2));
  if (equivalent(a, b)) {
    emit(json{{"equivalent", true}, {"bound", bound}}, "equivalent\n");
    return 0;
  }
  json report{{"equivalent", false}, {"bound", bound}};
  std::ostringstream text;
  text << "inequivalent";
  if (auto h = distinguishing_simple_class(a, b, bound)) {
    lin::i64 na = n_value(a, *h);
    lin::i64 nb = n_value(b, *h);
    report["distinguishing"] = h->v;
    report["n_values"] = {na, nb};
    text << ": class (";
    for (size_t i = 0; i < h->v.size(); ++i) text << (i ? " " : "") << h->v[i];
    text << ") has minimal elevation degrees " << na << " vs " << nb;
  } else {
    report["distinguishing"] = nullptr;
    text << "; no distinguishing primitive class within the box";
  }
  text << "\n";
  emit(report, text.str());
  return 1;
}

int group_eval(const FiniteGroup& G, const std::vector<int>& images, const Word& w) {
  int x = G.identity();
  for (Letter l : w) {
    int img = images[static_cast<size_t>((l < 0 ? -l : l) - 1)];
    x = G.mul(x, l > 0 ? img : G.inv(img));
  }
  return x;
}

int cmd_sunada_fixture(const Emit& emit) {
  MaungchangFixture f = maungchang_fixture();
  validate(f.group);
  GassmannReport rep = gassmann_check(maungchang_datum());
  SurfaceGroup G(2);
  bool rho_ok = group_eval(f.group, f.images, G.relator()) == f.group.identity();
  auto [ch, ck] = maungchang_covers();
  validate(ch);
  validate(ck);
  bool eq = covers_equivalent(ch, ck);
  json report{{"fixture", "maungchang"},
              {"order", f.group.order()},
              {"subgroup_order", static_cast<int>(f.h.size())},
              {"index", f.group.order() / static_cast<int>(f.h.size())},
              {"almost_conjugate", rep.almost_conjugate},
              {"conjugate", rep.conjugate},
              {"rho_relator_trivial", rho_ok},
              {"covers_equivalent", eq},
              {"total_genus", total_genus(ch)},
              {"covers", {{"h", cover_to_json(ch)}, {"k", cover_to_json(ck)}}}};
  std::ostringstream text;
  text << "order " << f.group.order() << " group, subgroups of index "
       << f.group.order() / static_cast<int>(f.h.size()) << "\n"
       << "almost conjugate: " << (rep.almost_conjugate ? "yes" : "no") << "\n"
       << "conjugate: " << (rep.conjugate ? "yes" : "no") << "\n"
       << "relator image trivial: " << (rho_ok ? "yes" : "no") << "\n"
       << "covers equivalent: " << (eq ? "yes" : "no") << ", total space genus "
       << total_genus(ch) << "\n";
  emit(report, text.str());
  return rep.almost_conjugate && !rep.conjugate && rho_ok ? 0 : 1;
}

int cmd_sunada_search(const std::string& path, int max_index, const Emit& emit) {
  FiniteGroup G = group_from_json(load_json(path));
  validate(G);
  std::vector<GassmannDatum> pairs = search_gassmann({G}, max_index);
  json rows = json::array();
  std::ostringstream text;
  for (const GassmannDatum& d : pairs) {
    rows.push_back({{"h", d.h}, {"k", d.k}});
    text << "pair: H = {";
    for (size_t i = 0; i < d.h.size(); ++i) text << (i ? " " : "") << d.h[i];
    text << "}, K = {";
    for (size_t i = 0; i < d.k.size(); ++i) text << (i ? " " : "") << d.k[i];
    text << "}\n";
  }
  if (pairs.empty()) text << "no almost conjugate nonconjugate pairs\n";
  emit(json{{"order", G.order()}, {"max_index", max_index}, {"pairs", std::move(rows)}},
       text.str());
  return pairs.empty() ? 1 : 0;
}

int cmd_intersect(int genus, const std::vector<std::string>& words, mpfr_prec_t bits,
                  const Emit& emit) {
  FuchsianModel m = build_model(genus, bits);
  if (words.size() == 1) {
    Word w = cli_word(words[0]);
    int n = self_intersection(m, w);
    emit(json{{"genus", genus}, {"word", format_word(w)}, {"self_intersection", n}},
         "self intersection = " + std::to_string(n) + "\n");
  } else {
    Word w1 = cli_word(words[0]);
    Word w2 = cli_word(words[1]);
    int n = geometric_intersection(m, w1, w2);
    emit(json{{"genus", genus},
              {"words", {format_word(w1), format_word(w2)}},
              {"intersection", n}},
         "geometric intersection = " + std::to_string(n) + "\n");
  }
  return 0;
}

int cmd_profile(const std::string& cover_path, const std::string& inv_path, mpfr_prec_t bits,
                const Emit& emit) {
  PermCover c = cover_from_json(load_json(cover_path));
  validate(c);
  std::vector<Word> words = words_from_json(load_json(inv_path));
  FuchsianModel m = build_model(c.genus, bits);
  json rows = json::array();
  std::ostringstream text;
  text << "word  min_degree  simple_elevation\n";
  for (const Word& w : words) {
    std::vector<Elevation> els = elevations(c, w);
    int min_deg = c.degree;
    bool simple_elev = false;
    for (const Elevation& e : els) {
      min_deg = std::min(min_deg, e.degree());
      if (!simple_elev && elevation_self_intersection(m, c, e) == 0) simple_elev = true;
    }
    rows.push_back({{"word", format_word(w)},
                    {"min_degree", min_deg},
                    {"simple_elevation", simple_elev}});
    text << format_word(w) << "  " << min_deg << "  " << (simple_elev ? "yes" : "no") << "\n";
  }
  emit(json{{"genus", c.genus}, {"degree", c.degree}, {"profile", std::move(rows)}},
       text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite covers of closed surfaces: elevations, cover equivalence, "
               "certified intersection numbers"};
  app.require_subcommand(1);

  Emit emit;
  int bound = 3;
  int genus = 2;
  int max_index = 8;
  long long bits = kDefaultPrecision;
  std::string path1, path2, word_arg, fixture, group_path;
  std::vector<std::string> words;

  auto common = [&](CLI::App* s) {
    s->add_option("--format", emit.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", emit.out, "write the report to a file instead of stdout");
    s->add_option("--seed", emit.seed, "random seed recorded in the report");
  };

  auto* v = app.add_subcommand("validate", "check a cover, abelian cover, or group document");
  v->add_option("path", path1, "JSON document")->required();
  common(v);

  auto* el = app.add_subcommand("elevations", "list the elevations of a curve along a cover");
  el->add_option("cover", path1, "cover document")->required();
  el->add_option("word", word_arg, "curve word, e.g. \"a1 b1 A1 B1\"")->required();
  common(el);

  auto* ae = app.add_subcommand("abelian-equiv", "decide equivalence of two abelian covers");
  ae->add_option("first", path1, "abelian cover document")->required();
  ae->add_option("second", path2, "abelian cover document")->required();
  ae->add_option("--bound", bound, "box bound for the distinguishing class search");
  common(ae);

  auto* su = app.add_subcommand("sunada", "almost conjugate subgroup pairs and their covers");
  su->add_option("--fixture", fixture, "built-in fixture name (maungchang)");
  su->add_option("--group", group_path, "group document to search");
  su->add_option("--max-index", max_index, "largest subgroup index searched");
  common(su);

  auto* in = app.add_subcommand("intersect", "certified intersection numbers at a given genus");
  in->add_option("words", words, "one word (self) or two (pairwise)")
      ->required()
      ->expected(1, 2);
  in->add_option("--genus", genus, "base surface genus");
  in->add_option("--precision-bits", bits, "starting ball arithmetic precision");
  common(in);

  auto* pr = app.add_subcommand("profile", "minimal elevation degrees and simple elevations");
  pr->add_option("cover", path1, "cover document")->required();
  pr->add_option("inventory", path2, "inventory document with a words array")->required();
  pr->add_option("--precision-bits", bits, "starting ball arithmetic precision");
  common(pr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*v) return cmd_validate(path1, emit);
    if (*el) return cmd_elevations(path1, word_arg, emit);
    if (*ae) return cmd_abelian_equiv(path1, path2, bound, emit);
    if (*su) {
      if (!fixture.empty() && fixture != "maungchang")
        throw surfcover::ParseError("unknown fixture: " + fixture);
      if (fixture.empty() == group_path.empty())
        throw surfcover::ParseError("sunada needs exactly one of --fixture or --group");
      return fixture.empty() ? cmd_sunada_search(group_path, max_index, emit)
                             : cmd_sunada_fixture(emit);
    }
    if (*in) return cmd_intersect(genus, words, static_cast<mpfr_prec_t>(bits), emit);
    if (*pr) return cmd_profile(path1, path2, static_cast<mpfr_prec_t>(bits), emit);
  } catch (const surfcover::PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 3;
  } catch (const surfcover::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
