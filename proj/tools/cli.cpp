#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "coxlab/character_table.hpp"
#include "coxlab/cuspidal.hpp"
#include "coxlab/error.hpp"
#include "coxlab/finite_group.hpp"
#include "coxlab/flags.hpp"
#include "coxlab/fourier.hpp"
#include "coxlab/gf.hpp"
#include "coxlab/hecke.hpp"
#include "coxlab/weyl.hpp"
#include "coxlab/weyl_enum.hpp"

namespace coxlab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "coxlab.report/1";

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("COXLAB_LOG");
    if (!env) return 0;
    const std::string v = env;
    if (v == "debug" || v == "2") return 2;
    if (v == "info" || v == "1") return 1;
    return 0;
  }();
  return level;
}

struct Common {
  bool json = false;
  bool csv = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_size;

  std::size_t group_bound() const { return max_size.value_or(kDefaultMaxGroupSize); }
  std::size_t flag_bound() const { return max_size.value_or(kDefaultMaxFlags); }
};

struct Output {
  Json params = Json::object();
  Json result = Json::object();
  std::string text;
  std::optional<std::string> csv;
};

Json big(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json rational(const Rational& x) {
  if (x.get_den() == 1) return big(x.get_num());
  return x.get_str();
}

Json cyclotomic(const Cyclotomic& value) {
  const Cyclotomic c = value.reduced();
  Json coords = Json::array();
  for (const auto& r : c.coordinates()) coords.push_back(r.get_str());
  return Json{{"conductor", c.conductor()}, {"coords", coords}, {"text", c.to_string()}};
}

Json qpoly(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(big(c));
  return a;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

CoxeterSpec parse_type(const std::string& type, int rank) {
  if (type.size() > 1) {
    const CoxeterSpec spec = CoxeterSpec::parse(type);
    if (rank != 0 && rank != spec.rank) fail(ErrorKind::UnsupportedSpec, "--rank disagrees with --type");
    return spec;
  }
  if (rank == 0) fail(ErrorKind::UnsupportedSpec, "--rank is required with a one-letter --type");
  return CoxeterSpec::parse(type + std::to_string(rank));
}

FiniteGroup load_group(const std::string& group, const std::string& perm_file, std::size_t max_size) {
  if (!perm_file.empty()) {
    std::ifstream in(perm_file);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + perm_file);
    std::vector<std::string> lines;
    int degree = 1;
    for (std::string line; std::getline(in, line);) {
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      lines.push_back(line.substr(start));
      degree = std::max(degree, max_point(lines.back()));
    }
    std::vector<Perm> gens;
    for (const auto& l : lines) gens.push_back(parse_cycles(l, degree));
    return FiniteGroup::generated_by(degree, gens, std::min(max_size, kMaxPermGroupSize));
  }
  if (group.empty()) fail(ErrorKind::InvalidArgument, "give --group builtin:NAME or --perm-file FILE");
  const std::string prefix = "builtin:";
  const std::string name = group.starts_with(prefix) ? group.substr(prefix.size()) : group;
  return FiniteGroup::builtin(name);
}

FieldMatrix parse_matrix(const Field& f, const std::string& text) {
  FieldMatrix m;
  std::stringstream rows(text);
  for (std::string row; std::getline(rows, row, ';');) {
    FieldVector v;
    std::stringstream cells(row);
    for (std::string cell; std::getline(cells, cell, ',');) {
      const auto b = cell.find_first_not_of(' ');
      if (b == std::string::npos) continue;
      long long x = 0;
      try {
        x = std::stoll(cell.substr(b));
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "bad matrix entry '" + cell + "'");
      }
      if (x < 0 || x >= static_cast<long long>(f.size()))
        fail(ErrorKind::InvalidArgument, "entry " + std::to_string(x) + " is not an element of the field");
      v.push_back(static_cast<FieldElem>(x));
    }
    m.push_back(std::move(v));
  }
  const std::size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) fail(ErrorKind::DimensionMismatch, "matrix must be square");
  return m;
}

std::vector<std::string> matrix_rows(const Field& f, const FieldMatrix& m) {
  std::vector<std::string> rows;
  for (const auto& r : m) {
    std::string s;
    for (std::size_t j = 0; j < r.size(); ++j) s += (j ? " " : "") + f.to_string(r[j]);
    rows.push_back(s);
  }
  return rows;
}

// ---------------------------------------------------------------------------

struct WeylOptions {
  std::string type;
  int rank = 0;
};

void add_weyl_options(CLI::App* sub, WeylOptions& o) {
  sub->add_option("--type", o.type, "Family letter (A..G) or full name such as E6")->required();
  sub->add_option("--rank", o.rank, "Rank, when --type is a single letter");
}

struct KLOptions {
  WeylOptions weyl;
  std::string y, w;
  bool all = false;
  bool verify = false;
};

Output run_kl(const KLOptions& o, const Common& c) {
  const CoxeterSpec spec = parse_type(o.weyl.type, o.weyl.rank);
  const auto group = EnumeratedGroup::build(spec, c.group_bound());
  const KLTable table(std::make_shared<HeckeAlgebra>(group), o.verify);
  Output out;
  out.params = {{"type", spec.name()}, {"all", o.all}, {"verify", o.verify}};
  std::vector<std::pair<ElementId, ElementId>> pairs;
  if (!o.y.empty()) {
    if (o.w.empty()) fail(ErrorKind::InvalidArgument, "--y needs --w");
    pairs.emplace_back(group->parse(o.y), group->parse(o.w));
    out.params["y"] = o.y;
    out.params["w"] = o.w;
  } else {
    std::vector<ElementId> columns;
    if (!o.w.empty()) {
      columns.push_back(group->parse(o.w));
      out.params["w"] = o.w;
    } else if (o.all) {
      for (ElementId w = 0; w < group->size(); ++w) columns.push_back(w);
    } else {
      fail(ErrorKind::InvalidArgument, "give --w, --y with --w, or --all");
    }
    for (ElementId w : columns)
      for (ElementId y : group->lower_interval(w)) pairs.emplace_back(y, w);
  }
  Json entries = Json::array();
  std::ostringstream text, csv;
  csv << "y,w,coefficients\n";
  std::size_t nontrivial = 0;
  for (const auto& [y, w] : pairs) {
    const QPoly p = table.polynomial(y, w);
    if (!(p.size() == 1 && p[0] == 1) && !p.empty()) ++nontrivial;
    Json e{{"y", group->format(y)}, {"w", group->format(w)}, {"coeffs", qpoly(p)}, {"poly", format_qpoly(p)}};
    if (pairs.size() == 1) e["mu"] = big(table.mu(y, w));
    entries.push_back(e);
    text << group->format(y) << " | " << group->format(w) << " | " << format_qpoly(p) << "\n";
    std::string cs;
    for (std::size_t i = 0; i < p.size(); ++i) cs += (i ? " " : "") + p[i].get_str();
    csv << '"' << group->format(y) << "\",\"" << group->format(w) << "\"," << cs << "\n";
  }
  if (pairs.size() == 1) text << "mu = " << table.mu(pairs[0].first, pairs[0].second).get_str() << "\n";
  text << pairs.size() << " pairs, " << nontrivial << " with P != 1\n";
  out.result = {{"group_order", group->size()}, {"pairs", pairs.size()}, {"nontrivial", nontrivial}, {"entries", entries}};
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

struct CellsOptions {
  WeylOptions weyl;
  std::string kind = "two-sided";
};

Output run_cells(const CellsOptions& o, const Common& c) {
  const CoxeterSpec spec = parse_type(o.weyl.type, o.weyl.rank);
  CellKind kind;
  if (o.kind == "left") kind = CellKind::Left;
  else if (o.kind == "right") kind = CellKind::Right;
  else if (o.kind == "two-sided") kind = CellKind::TwoSided;
  else fail(ErrorKind::InvalidArgument, "--kind must be left, right or two-sided");
  const auto group = EnumeratedGroup::build(spec, c.group_bound());
  const KLTable table(std::make_shared<HeckeAlgebra>(group));
  const CellPartition part = cells(table, kind);
  Output out;
  out.params = {{"type", spec.name()}, {"kind", std::string(to_string(kind))}};
  Json blocks = Json::array();
  std::vector<int> sizes;
  std::ostringstream text, csv;
  csv << "block,size,elements\n";
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    Json block = Json::array();
    std::string elems;
    for (ElementId x : part.blocks[b]) {
      block.push_back(group->format(x));
      elems += (elems.empty() ? "" : "; ") + group->format(x);
    }
    blocks.push_back(block);
    sizes.push_back(static_cast<int>(part.blocks[b].size()));
    text << "[" << b << "] size " << part.blocks[b].size() << ": " << elems << "\n";
    csv << b << "," << part.blocks[b].size() << ",\"" << elems << "\"\n";
  }
  text << part.blocks.size() << " " << to_string(kind) << " cells\n";
  out.result = {{"count", part.blocks.size()}, {"sizes", sizes}, {"blocks", blocks}};
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

struct PalindromeOptions {
  WeylOptions weyl;
  std::string w;
  bool all = false;
};

Output run_palindrome(const PalindromeOptions& o, const Common& c) {
  const CoxeterSpec spec = parse_type(o.weyl.type, o.weyl.rank);
  const auto group = EnumeratedGroup::build(spec, c.group_bound());
  const KLTable table(std::make_shared<HeckeAlgebra>(group));
  std::vector<ElementId> ws;
  if (!o.w.empty()) ws.push_back(group->parse(o.w));
  else if (o.all)
    for (ElementId w = 0; w < group->size(); ++w) ws.push_back(w);
  else fail(ErrorKind::InvalidArgument, "give --w or --all");
  Output out;
  out.params = {{"type", spec.name()}};
  if (!o.w.empty()) out.params["w"] = o.w;
  out.params["all"] = o.all;
  Json rows = Json::array();
  std::ostringstream text, csv;
  csv << "w,length,palindromic,coefficients\n";
  bool all_ok = true;
  for (ElementId w : ws) {
    const PalindromeResult r = palindrome_check(table, w);
    all_ok = all_ok && r.palindromic;
    rows.push_back({{"w", group->format(w)}, {"length", r.length}, {"polynomial", qpoly(r.polynomial)},
                    {"text", format_qpoly(r.polynomial, "X")}, {"palindromic", r.palindromic}});
    text << group->format(w) << ": " << format_qpoly(r.polynomial, "X") << "  "
         << (r.palindromic ? "palindromic" : "NOT palindromic") << "\n";
    std::string cs;
    for (std::size_t i = 0; i < r.polynomial.size(); ++i) cs += (i ? " " : "") + r.polynomial[i].get_str();
    csv << '"' << group->format(w) << "\"," << r.length << "," << (r.palindromic ? "true" : "false") << "," << cs << "\n";
  }
  out.result = {{"all_palindromic", all_ok}, {"rows", rows}};
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

struct GroupOptions {
  std::string group;
  std::string perm_file;
};

void add_group_options(CLI::App* sub, GroupOptions& o) {
  sub->add_option("--group", o.group, "builtin:S3, builtin:A5, builtin:F2^2, builtin:Z4, builtin:trivial ...");
  sub->add_option("--perm-file", o.perm_file, "File with one generator per line in cycle notation");
}

Json group_params(const GroupOptions& o) {
  Json p = Json::object();
  if (!o.group.empty()) p["group"] = o.group;
  if (!o.perm_file.empty()) p["perm_file"] = o.perm_file;
  return p;
}

struct FourierOptions {
  GroupOptions group;
  bool matrix = false;
  bool check = false;
  std::vector<std::size_t> entry;
};

Output run_fourier(const FourierOptions& o, const Common& c) {
  const FourierData data(load_group(o.group.group, o.group.perm_file, c.group_bound()));
  Output out;
  out.params = group_params(o.group);
  out.params["matrix"] = o.matrix;
  out.params["check"] = o.check;
  std::ostringstream text, csv;
  const auto& pairs = data.pairs();
  const auto& classes = data.group().classes();
  Json plist = Json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    plist.push_back({{"index", i},
                     {"class", data.group().format(classes[p.class_index].representative)},
                     {"class_size", classes[p.class_index].members.size()},
                     {"centralizer_order", data.centralizer(p.class_index).order()},
                     {"character", p.character},
                     {"degree", data.centralizer_table(p.class_index).degrees[p.character]}});
  }
  out.result["group_order"] = data.group().order();
  out.result["classes"] = classes.size();
  out.result["m_size"] = pairs.size();
  out.result["pairs"] = plist;
  text << "|G| = " << data.group().order() << ", " << classes.size() << " classes, |M(G)| = " << pairs.size() << "\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) text << "  " << i << ": " << data.describe(pairs[i]) << "\n";
  if (!o.entry.empty()) {
    if (o.entry.size() != 2) fail(ErrorKind::InvalidArgument, "--entry takes two pair indices");
    if (o.entry[0] >= pairs.size() || o.entry[1] >= pairs.size()) fail(ErrorKind::InvalidPair, "pair index out of range");
    const Cyclotomic e = data.entry(pairs[o.entry[0]], pairs[o.entry[1]]);
    out.result["entry"] = {{"row", o.entry[0]}, {"column", o.entry[1]}, {"value", cyclotomic(e)}};
    text << "entry(" << o.entry[0] << "," << o.entry[1] << ") = " << e.to_string() << "\n";
  }
  if (o.matrix || o.check) {
    const CyclotomicMatrix m = data.matrix();
    if (o.matrix) {
      Json rows = Json::array();
      csv << "row,column,value\n";
      for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) {
          row.push_back(cyclotomic(m[i][j]));
          text << (j ? "  " : "  [") << m[i][j].to_string();
          csv << i << "," << j << ",\"" << m[i][j].to_string() << "\"\n";
        }
        text << "]\n";
        rows.push_back(row);
      }
      out.result["matrix"] = rows;
      out.csv = csv.str();
    }
    if (o.check) {
      const bool involutive = is_identity(multiply(m, m));
      const auto mh = conjugate_transpose(m);
      const bool unitary = is_identity(multiply(m, mh));
      const bool hermitian = m == mh;
      auto word = [](bool b) { return b ? "pass" : "fail"; };
      out.result["checks"] = {{"unitary", word(unitary)}, {"involutive", word(involutive)}, {"hermitian", word(hermitian)}};
      text << "unitary=" << word(unitary) << " involutive=" << word(involutive) << " hermitian=" << word(hermitian) << "\n";
    }
  }
  out.text = text.str();
  return out;
}

struct TriplesOptions {
  GroupOptions group;
  std::vector<std::size_t> classes;
  bool brute = false;
};

Output run_triples(const TriplesOptions& o, const Common& c) {
  const FiniteGroup g = load_group(o.group.group, o.group.perm_file, c.group_bound());
  const CharacterTable table = character_table(g);
  const auto& classes = g.classes();
  Output out;
  out.params = group_params(o.group);
  out.params["brute"] = o.brute;
  std::ostringstream text, csv;
  Json clist = Json::array();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    clist.push_back({{"index", k},
                     {"representative", g.format(classes[k].representative)},
                     {"size", classes[k].members.size()},
                     {"order", g.element_order(classes[k].representative)}});
    text << "class " << k << ": " << g.format(classes[k].representative) << " size " << classes[k].members.size()
         << " order " << g.element_order(classes[k].representative) << "\n";
  }
  std::vector<std::array<std::size_t, 3>> triples;
  if (!o.classes.empty()) {
    if (o.classes.size() != 3) fail(ErrorKind::NotAClass, "--classes takes three class indices");
    triples.push_back({o.classes[0], o.classes[1], o.classes[2]});
    out.params["classes"] = o.classes;
  } else {
    for (std::size_t a = 0; a < classes.size(); ++a)
      for (std::size_t b = a; b < classes.size(); ++b)
        for (std::size_t cc = b; cc < classes.size(); ++cc) triples.push_back({a, b, cc});
  }
  Json rows = Json::array();
  csv << "a,b,c,character_sum" << (o.brute ? ",brute_force" : "") << "\n";
  bool all_agree = true;
  for (const auto& t : triples) {
    const Rational value = burnside_triple_count(g, table, t[0], t[1], t[2]);
    Json row{{"classes", t}, {"character_sum", rational(value)}, {"integer", value.get_den() == 1}};
    text << "(" << t[0] << "," << t[1] << "," << t[2] << "): " << value.get_str();
    csv << t[0] << "," << t[1] << "," << t[2] << "," << value.get_str();
    if (o.brute) {
      const BigInt count = brute_force_triple_count(g, t[0], t[1], t[2]);
      const bool agree = Rational(count) == value;
      all_agree = all_agree && agree;
      row["brute_force"] = big(count);
      row["agree"] = agree;
      text << " brute " << count.get_str() << (agree ? "" : " MISMATCH");
      csv << "," << count.get_str();
    }
    text << "\n";
    csv << "\n";
    rows.push_back(row);
  }
  out.result = {{"group_order", g.order()}, {"classes", clist}, {"triples", rows}};
  if (o.brute) out.result["all_agree"] = all_agree;
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

struct DLOptions {
  std::string group = "GL";
  int n = 2;
  std::uint64_t q = 2;
  int m = 1;
  bool coxeter = false;
};

Output run_dl(const DLOptions& o, const Common& c) {
  GroupType type;
  if (o.group == "GL") type = GroupType::GL;
  else if (o.group == "Sp") type = GroupType::Sp;
  else fail(ErrorKind::UnsupportedSpec, "--group must be GL or Sp");
  const DLCountReport r = dl_piece_counts(type, o.n, o.q, o.m, c.flag_bound());
  Output out;
  out.params = {{"group", o.group}, {"n", o.n}, {"q", o.q}, {"m", o.m}};
  std::ostringstream text, csv;
  csv << "w,word,length,count\n";
  Json rows = Json::array();
  std::uint64_t sum = 0;
  const auto weyl = WeylGroup::build(weyl_type(type, o.n));
  for (const auto& row : r.rows) {
    rows.push_back({{"w", row.element.one_line()}, {"word", weyl->format_word(row.word)}, {"length", row.length},
                    {"count", row.count}});
    text << row.element.one_line() << "  " << weyl->format_word(row.word) << "  " << row.count << "\n";
    csv << '"' << row.element.one_line() << "\",\"" << weyl->format_word(row.word) << "\"," << row.length << ","
        << row.count << "\n";
    sum += row.count;
  }
  text << "total " << r.total << " flags, sum of pieces " << sum << "\n";
  out.result = {{"weyl_group", weyl->spec().name()}, {"total", r.total}, {"sum", sum},
                {"partition", sum == r.total ? "pass" : "fail"}, {"rows", rows}};
  if (o.coxeter) {
    if (type != GroupType::GL) fail(ErrorKind::UnsupportedSpec, "the Coxeter condition check is for GL");
    const CoxeterConditionReport cx = coxeter_condition_check(o.n, o.q, o.m, c.flag_bound());
    out.result["coxeter"] = {{"chain_condition", cx.chain_condition}, {"coxeter_position", cx.coxeter_position},
                             {"both", cx.both}, {"equal", cx.equal}};
    text << "Coxeter condition: chain " << cx.chain_condition << ", position " << cx.coxeter_position
         << ", equal=" << (cx.equal ? "true" : "false") << "\n";
  }
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

struct DrinfeldOptions {
  std::uint64_t q = 2;
  int m = 1;
  int samples = 10;
};

Output run_drinfeld(const DrinfeldOptions& o, const Common& c) {
  const DrinfeldReport r = drinfeld_count(o.q, o.m, c.seed, o.samples);
  Output out;
  out.params = {{"q", o.q}, {"m", o.m}, {"seed", c.seed}, {"samples", o.samples}};
  out.result = {{"count", r.count},
                {"torus_in_field", r.torus_in_field},
                {"torus_free", r.torus_free},
                {"divisible_by_q_plus_1", r.divisible},
                {"sl2_samples", r.sl2_samples},
                {"sl2_invariant", r.sl2_invariant}};
  std::ostringstream text;
  text << "points over GF(" << o.q << "^" << o.m << "): " << r.count << "\n"
       << "mu_{q+1} in field: " << (r.torus_in_field ? "yes" : "no");
  if (r.torus_in_field) text << ", free orbits: " << (r.torus_free ? "yes" : "no");
  text << "\ndivisible by q+1: " << (r.divisible ? "yes" : "no") << "\nSL2(F_q) invariance on " << r.sl2_samples
       << " samples: " << (r.sl2_invariant ? "pass" : "fail") << "\n";
  out.text = text.str();
  return out;
}

struct BrauerDimOptions {
  int n = 2;
  int p = 2;
  std::string mode = "modular";
};

Output run_brauer_dim(const BrauerDimOptions& o, const Common& c) {
  FlagFunctionMode mode;
  if (o.mode == "modular") mode = FlagFunctionMode::Modular;
  else if (o.mode == "rational") mode = FlagFunctionMode::Rational;
  else fail(ErrorKind::InvalidArgument, "--mode must be modular or rational");
  const FlagFunctionReport r = brauer_space_dim(o.n, o.p, mode, c.seed, c.flag_bound());
  Output out;
  out.params = {{"n", o.n}, {"p", o.p}, {"mode", o.mode}, {"seed", c.seed}};
  out.result = {{"flags", r.flags},          {"equations", r.equations},
                {"dimension", r.dimension},  {"expected", big(r.expected)},
                {"matches", BigInt(static_cast<unsigned long>(r.dimension)) == r.expected},
                {"stability_samples", r.stability_samples}, {"stable", r.stable}};
  std::ostringstream text;
  text << "n=" << o.n << " p=" << o.p << " " << o.mode << ": " << r.flags << " flags, " << r.equations
       << " equations, kernel dimension " << r.dimension << " (expected " << r.expected.get_str() << ")\n"
       << "GL-stability on " << r.stability_samples << " samples: " << (r.stable ? "pass" : "fail") << "\n";
  out.text = text.str();
  return out;
}

struct BrauerCharOptions {
  int p = 2;
  int s = 1;
  std::string matrix;
};

Output run_brauer_char(const BrauerCharOptions& o, const Common&) {
  const auto field = Field::make(o.p, o.s);
  const FieldMatrix g = parse_matrix(*field, o.matrix);
  const BrauerCharacterReport r = brauer_character(*field, g);
  Output out;
  out.params = {{"p", o.p}, {"s", o.s}, {"matrix", matrix_rows(*field, g)}};
  std::vector<std::uint32_t> logs = r.eigenvalues;
  std::uint64_t size = 1;
  for (int i = 0; i < o.s * r.splitting_degree; ++i) size *= static_cast<std::uint64_t>(o.p);
  out.result = {{"splitting_field", "GF(" + std::to_string(o.p) + "^" + std::to_string(o.s * r.splitting_degree) + ")"},
                {"multiplicative_order", size - 1},
                {"eigenvalue_logs", logs},
                {"value", cyclotomic(r.value)}};
  std::ostringstream text;
  text << "eigenvalues a^k in GF(" << o.p << "^" << o.s * r.splitting_degree << "), k = ";
  for (std::size_t i = 0; i < logs.size(); ++i) text << (i ? "," : "") << logs[i];
  text << "\nchi(g) = " << r.value.to_string() << "\n";
  out.text = text.str();
  return out;
}

struct CuspidalOptions {
  std::string type;
  int rank = 0;
  bool q1 = false;
  bool check = false;
};

Output run_cuspidal(const CuspidalOptions& o, const Common& c) {
  const CoxeterSpec spec = parse_type(o.type, o.rank);
  const auto data = cuspidal_data(spec);
  Output out;
  out.params = {{"type", spec.name()}, {"q1", o.q1}, {"check", o.check}};
  std::ostringstream text, csv;
  Json rows = Json::array();
  if (o.q1) {
    csv << "class,root\n";
    for (const auto& d : specialize_q1(data)) {
      Json row{{"class", d.cls.to_string()},
               {"root", {{"numerator", d.root.numerator}, {"denominator", d.root.denominator}, {"text", d.root.to_string()}}},
               {"half_integer_exponent", d.half_integer_exponent}};
      rows.push_back(row);
      text << d.cls.to_string() << "  " << d.root.to_string()
           << (d.half_integer_exponent ? "  (depends on a choice of sqrt(q))" : "") << "\n";
      csv << '"' << d.cls.to_string() << "\"," << d.root.to_string() << "\n";
    }
  } else {
    csv << "label,class,root,q_exponent\n";
    for (const auto& d : data) {
      Json row{{"label", d.label},
               {"class", d.cls.to_string()},
               {"root", {{"numerator", d.eigenvalue.root.numerator}, {"denominator", d.eigenvalue.root.denominator},
                         {"text", d.eigenvalue.root.to_string()}}},
               {"q_exponent", d.eigenvalue.exponent_string()},
               {"eigenvalue", d.eigenvalue.to_string()}};
      if (d.cls.kind == ClassSpec::Kind::CycleType) row["cycle_type"] = d.cls.cycles;
      else {
        Json f = Json::object();
        for (const auto& [k, v] : d.cls.factors) f[std::to_string(k)] = v;
        row["char_poly"] = f;
      }
      rows.push_back(row);
      text << d.label << "  " << d.cls.to_string() << "  " << d.eigenvalue.to_string() << "\n";
      csv << d.label << ",\"" << d.cls.to_string() << "\"," << d.eigenvalue.root.to_string() << ","
          << d.eigenvalue.exponent_string() << "\n";
    }
  }
  text << data.size() << " data\n";
  out.result = {{"count", data.size()}, {"rows", rows}};
  if (spec.is_classical()) {
    const CuspidalCondition cond = has_cuspidal(spec);
    out.result["condition"] = {{"exists", cond.exists}, {"k", cond.k}};
  }
  if (o.check) {
    const ValidationReport v = validate(spec, c.group_bound());
    Json checks = Json::array();
    for (const auto& ch : v.checks) {
      checks.push_back({{"name", ch.name}, {"status", to_string(ch.status)}, {"required", ch.required}, {"detail", ch.detail}});
      text << "[" << to_string(ch.status) << (ch.required ? "" : ", informational") << "] " << ch.name << ": "
           << ch.detail << "\n";
    }
    out.result["checks"] = checks;
    out.result["ok"] = v.ok();
    text << (v.ok() ? "all required checks pass" : "some required checks FAIL") << "\n";
  }
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

struct CharpolyOptions {
  WeylOptions weyl;
  std::string w = "e";
  bool cls = false;
};

Output run_charpoly(const CharpolyOptions& o, const Common& c) {
  const CoxeterSpec spec = parse_type(o.weyl.type, o.weyl.rank);
  const auto group = WeylGroup::build(spec);
  const WeylElement w = group->parse_word(o.w);
  const CharPolyResult cp = char_poly_reflection(w);
  Output out;
  out.params = {{"type", spec.name()}, {"w", o.w}, {"class", o.cls}};
  std::ostringstream text;
  out.result["reduced_word"] = group->format(w);
  out.result["length"] = length(w);
  out.result["coefficients"] = cp.coefficients;
  out.result["polynomial"] = format_poly(cp.coefficients);
  text << "w = " << group->format(w) << " (length " << length(w) << ")\n"
       << "charpoly = " << format_poly(cp.coefficients) << "\n";
  if (cp.cyclotomic_factors) {
    Json f = Json::object();
    for (const auto& [k, v] : *cp.cyclotomic_factors) f[std::to_string(k)] = v;
    out.result["factors"] = f;
    out.result["factorization"] = format_cyclotomic_factors(*cp.cyclotomic_factors);
    text << "         = " << format_cyclotomic_factors(*cp.cyclotomic_factors) << "\n";
  }
  out.result["elliptic"] = is_elliptic(w);
  text << "elliptic: " << (is_elliptic(w) ? "yes" : "no") << "\n";
  if (spec.is_classical()) {
    const BigPermutation p = to_big_permutation(w);
    out.result["permutation"] = p.one_line();
    out.result["cycle_type"] = cycle_type(p);
    text << "permutation " << p.one_line() << ", cycle type " << join(cycle_type(p)) << "\n";
  }
  if (o.cls) {
    const auto members = conjugacy_class(w, c.max_size.value_or(kDefaultMaxClassSize));
    const int min_len = min_length_in_class(members);
    out.result["class_size"] = members.size();
    out.result["min_length"] = min_len;
    text << "class size " << members.size() << ", minimal length " << min_len << "\n";
  }
  out.text = text.str();
  return out;
}

struct RelposOptions {
  int p = 2;
  int s = 1;
  std::string a, b;
  bool symplectic = false;
};

Output run_relpos(const RelposOptions& o, const Common&) {
  const auto field = Field::make(o.p, o.s);
  const FieldMatrix a = parse_matrix(*field, o.a), b = parse_matrix(*field, o.b);
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "bases of different sizes");
  const Flag fa = flag_from_basis(*field, a), fb = flag_from_basis(*field, b);
  std::optional<SymplecticForm> form;
  if (o.symplectic) {
    if (a.size() % 2 != 0) fail(ErrorKind::NotSymplectic, "symplectic spaces have even dimension");
    form.emplace(static_cast<int>(a.size() / 2));
  }
  const BigPermutation w = relative_position(*field, fa, fb, form ? &*form : nullptr);
  Output out;
  out.params = {{"p", o.p}, {"s", o.s}, {"a", matrix_rows(*field, a)}, {"b", matrix_rows(*field, b)},
                {"symplectic", o.symplectic}};
  out.result = {{"permutation", w.one_line()}, {"cycle_type", cycle_type(w)}};
  std::ostringstream text;
  text << "relative position " << w.one_line() << "\n";
  if (o.symplectic) {
    out.result["commutes_with_involution"] = w.commutes_with_involution();
    text << "commutes with i -> 2n+1-i: " << (w.commutes_with_involution() ? "yes" : "no") << "\n";
  }
  out.text = text.str();
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Weyl groups, Hecke algebras, finite groups and flags over finite fields",
               "coxlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Print the report as JSON");
  app.add_flag("--csv", common.csv, "Print tabular results as CSV");
  app.add_option("--seed", common.seed, "Seed for sampled checks");
  app.add_option("--max-size", common.max_size, "Enumeration bound (group elements or flags)");

  std::function<Output()> action;
  std::string command;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&command, name] { command = name; });
    return s;
  };

  KLOptions kl;
  auto* kl_cmd = sub("kl", "Kazhdan-Lusztig polynomials P_{y,w}");
  add_weyl_options(kl_cmd, kl.weyl);
  kl_cmd->add_option("--y", kl.y, "Lower element as a word, e.g. \"s2\"");
  kl_cmd->add_option("--w", kl.w, "Upper element as a word, e.g. \"s2 s1 s3 s2\"");
  kl_cmd->add_flag("--all", kl.all, "Every pair y <= w");
  kl_cmd->add_flag("--verify", kl.verify, "Check bar invariance and the degree bound for every C'_w");

  CellsOptions cl;
  auto* cells_cmd = sub("cells", "Left, right or two-sided Kazhdan-Lusztig cells");
  add_weyl_options(cells_cmd, cl.weyl);
  cells_cmd->add_option("--kind", cl.kind, "left | right | two-sided");

  PalindromeOptions pal;
  auto* pal_cmd = sub("palindrome", "Palindromicity of sum_{y<=w} X^l(y) P_{y,w}(X)");
  add_weyl_options(pal_cmd, pal.weyl);
  pal_cmd->add_option("--w", pal.w, "Element as a word");
  pal_cmd->add_flag("--all", pal.all, "Every element of W");

  FourierOptions fo;
  auto* fo_cmd = sub("fourier", "The set M(G) and the Fourier pairing matrix");
  add_group_options(fo_cmd, fo.group);
  fo_cmd->add_flag("--matrix", fo.matrix, "Print the full matrix");
  fo_cmd->add_flag("--check", fo.check, "Check M*M = I, M*conj(M)^T = I and hermitian symmetry");
  fo_cmd->add_option("--entry", fo.entry, "Two pair indices")->expected(2)->delimiter(',');

  TriplesOptions tr;
  auto* tr_cmd = sub("triples", "Burnside character-sum counts of abc = 1 over class triples");
  add_group_options(tr_cmd, tr.group);
  tr_cmd->add_option("--classes", tr.classes, "Three class indices a,b,c")->expected(3)->delimiter(',');
  tr_cmd->add_flag("--brute", tr.brute, "Compare with direct enumeration");

  DLOptions dl;
  auto* dl_cmd = sub("dl", "Flags over GF(q^m) by the relative position of (B, F(B))");
  dl_cmd->add_option("--group", dl.group, "GL | Sp");
  dl_cmd->add_option("--n", dl.n, "GL_n, or Sp_2n")->required();
  dl_cmd->add_option("--q", dl.q, "Prime power q")->required();
  dl_cmd->add_option("--m", dl.m, "Extension degree m");
  dl_cmd->add_flag("--coxeter", dl.coxeter, "Compare the chain condition with the Coxeter piece (GL)");

  DrinfeldOptions dr;
  auto* dr_cmd = sub("drinfeld", "Points of x^q y - x y^q = 1 over GF(q^m)");
  dr_cmd->add_option("--q", dr.q, "Prime power q")->required();
  dr_cmd->add_option("--m", dr.m, "Extension degree m");
  dr_cmd->add_option("--samples", dr.samples, "Random SL_2(F_q) elements to test");

  BrauerDimOptions bd;
  auto* bd_cmd = sub("brauer-dim", "Dimension of the space of flag functions on GF(p)^n");
  bd_cmd->add_option("--n", bd.n, "Dimension n")->required();
  bd_cmd->add_option("--p", bd.p, "Prime p")->required();
  bd_cmd->add_option("--mode", bd.mode, "modular | rational");

  BrauerCharOptions bc;
  auto* bc_cmd = sub("brauer-char", "Brauer character value of a matrix over GF(p^s)");
  bc_cmd->add_option("--p", bc.p, "Characteristic")->required();
  bc_cmd->add_option("--s", bc.s, "Extension degree of the field of entries");
  bc_cmd->add_option("--matrix", bc.matrix, "Rows separated by ';', entries by ',' (element codes)")->required();

  CuspidalOptions cu;
  auto* cu_cmd = sub("cuspidal", "Unipotent cuspidal data (C, mu) of a simple type");
  cu_cmd->add_option("--type", cu.type, "Family letter or full name such as E8")->required();
  cu_cmd->add_option("--rank", cu.rank, "Rank, when --type is a single letter");
  cu_cmd->add_flag("--q1", cu.q1, "Specialize at q = 1");
  cu_cmd->add_flag("--check", cu.check, "Run the consistency checks");

  CharpolyOptions cp;
  auto* cp_cmd = sub("charpoly", "Characteristic polynomial on the reflection representation");
  add_weyl_options(cp_cmd, cp.weyl);
  cp_cmd->add_option("--w", cp.w, "Element as a word");
  cp_cmd->add_flag("--class", cp.cls, "Size and minimal length of the conjugacy class");

  RelposOptions rp;
  auto* rp_cmd = sub("relpos", "Relative position of two flags given by bases");
  rp_cmd->add_option("--p", rp.p, "Characteristic")->required();
  rp_cmd->add_option("--s", rp.s, "Extension degree");
  rp_cmd->add_option("--a", rp.a, "Basis of the first flag, rows separated by ';'")->required();
  rp_cmd->add_option("--b", rp.b, "Basis of the second flag")->required();
  rp_cmd->add_flag("--symplectic", rp.symplectic, "Require both flags to be self-dual for the symplectic form");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const std::map<std::string, std::function<Output()>> runners{
      {"kl", [&] { return run_kl(kl, common); }},
      {"cells", [&] { return run_cells(cl, common); }},
      {"palindrome", [&] { return run_palindrome(pal, common); }},
      {"fourier", [&] { return run_fourier(fo, common); }},
      {"triples", [&] { return run_triples(tr, common); }},
      {"dl", [&] { return run_dl(dl, common); }},
      {"drinfeld", [&] { return run_drinfeld(dr, common); }},
      {"brauer-dim", [&] { return run_brauer_dim(bd, common); }},
      {"brauer-char", [&] { return run_brauer_char(bc, common); }},
      {"cuspidal", [&] { return run_cuspidal(cu, common); }},
      {"charpoly", [&] { return run_charpoly(cp, common); }},
      {"relpos", [&] { return run_relpos(rp, common); }},
  };

  Json report{{"schema", kSchema}, {"command", command}, {"args", args}};
  const auto start = std::chrono::steady_clock::now();
  try {
    Output o = runners.at(command)();
    if (log_level() >= 1)
      err << "[coxlab] " << command << " finished in "
          << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    if (common.json) {
      report["parameters"] = o.params;
      report["status"] = "ok";
      report["result"] = o.result;
      out << report.dump(2) << "\n";
    } else if (common.csv) {
      if (!o.csv) {
        err << "error: " << command << " has no tabular output\n";
        return 1;
      }
      out << *o.csv;
    } else {
      out << o.text;
    }
    return 0;
  } catch (const DomainError& e) {
    if (common.json) {
      report["status"] = "error";
      report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      out << report.dump(2) << "\n";
    }
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  }
}

}  // namespace coxlab::cli
