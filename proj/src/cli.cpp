#include "permpath/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <variant>

#include "permpath/bijections.hpp"
#include "permpath/errors.hpp"
#include "permpath/formulas.hpp"
#include "permpath/json_io.hpp"
#include "permpath/verify.hpp"

namespace permpath::cli {

using nlohmann::json;
namespace pj = permpath::json;

// --- filter mini-grammar ----------------------------------------------------

namespace {

class FilterParser {
 public:
  FilterParser(std::string_view text, ParsedFilter& into) : s_(text), f_(into) {}

  void parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("expected a condition");
    atom();
    for (;;) {
      skip_ws();
      if (pos_ == s_.size()) return;
      expect("&&");
      atom();
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw InvalidInput("filter parse error at column " + std::to_string(at + 1) + ": " + what);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) != tok) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }

  std::string identifier() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail("expected a condition name");
    return std::string(s_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == s_.data() + pos_) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  int positive() {
    const auto at = (skip_ws(), pos_);
    const int v = integer();
    if (v < 1) fail("expected a positive integer", at);
    return v;
  }

  void atom() {
    skip_ws();
    const auto start = pos_;
    const std::string name = identifier();
    if (name == "pattern") {
      expect("(");
      skip_ws();
      const auto word_at = pos_;
      const auto close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("expected ')'", s_.size());
      auto word = s_.substr(pos_, close - pos_);
      while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) word.remove_suffix(1);
      std::optional<Pattern> t;
      try {
        t = Pattern::parse(word);
      } catch (const InvalidInput& e) {
        fail(e.what(), word_at);
      }
      pos_ = close + 1;
      expect("==");
      const auto at = (skip_ws(), pos_);
      const int k = integer();
      if (k < 0) fail("occurrence count must be >= 0", at);
      f_.perm.pattern_count(*t, static_cast<std::size_t>(k));
      ++f_.perm_atoms;
    } else if (name == "first") {
      expect(">=");
      f_.perm.first_ge(positive());
      ++f_.perm_atoms;
    } else if (name == "last_inc") {
      expect("(");
      const int i = positive();
      expect(")");
      f_.perm.last_increasing(i);
      ++f_.perm_atoms;
    } else if (name == "pos_of_max") {
      expect("<=");
      f_.perm.pos_of_max_le(positive());
      ++f_.perm_atoms;
    } else if (name == "height") {
      expect("<=");
      const auto at = (skip_ws(), pos_);
      const int h = integer();
      if (h < 0) fail("height bound must be >= 0", at);
      f_.path.height_le(h);
      ++f_.path_atoms;
    } else {
      fail("unknown condition '" + name + "'", start);
    }
  }

  std::string_view s_;
  ParsedFilter& f_;
  std::size_t pos_ = 0;
};

}  // namespace

void parse_filter(std::string_view text, ParsedFilter& into) { FilterParser(text, into).parse(); }

// --- bijections --------------------------------------------------------------

namespace {

using Value = std::variant<Permutation, LatticePath, Decomposition, ReturnsDeletion>;
enum class Kind { Perm, Path, Decomp, Returns };

struct MapSpec {
  std::string name;
  Kind from;
  Kind to;
  const char* param_label;  // name of Decomposition::param in the output
  bool takes_param;         // forward map reads --param
  std::function<Value(const Value&, int)> forward;
  std::function<Value(const Value&, int)> inverse;
};

const Permutation& as_perm(const Value& v) { return std::get<Permutation>(v); }
const LatticePath& as_path(const Value& v) { return std::get<LatticePath>(v); }
const Decomposition& as_decomp(const Value& v) { return std::get<Decomposition>(v); }

const Permutation& sigma_of(const Decomposition& d) {
  if (!d.sigma) throw InvalidInput("this map needs sigma (--sigma or a JSON decomposition)");
  return *d.sigma;
}

const std::vector<MapSpec>& map_specs() {
  static const std::vector<MapSpec> specs = {
      {"kratt", Kind::Perm, Kind::Path, "", false,
       [](const Value& v, int) -> Value { return kratt_forward(as_perm(v)); },
       [](const Value& v, int) -> Value { return kratt_inverse(as_path(v)); }},
      {"kratt-inv", Kind::Path, Kind::Perm, "", false,
       [](const Value& v, int) -> Value { return kratt_inverse(as_path(v)); },
       [](const Value& v, int) -> Value { return kratt_forward(as_perm(v)); }},
      {"lemma11", Kind::Perm, Kind::Decomp, "k", false,
       [](const Value& v, int) -> Value { return split_consecutive_132(as_perm(v)); },
       [](const Value& v, int) -> Value {
         const auto& d = as_decomp(v);
         return join_consecutive_132(d.rho, d.param);
       }},
      {"lemma12", Kind::Perm, Kind::Perm, "", false,
       [](const Value& v, int) -> Value { return strip_outer_132(as_perm(v)); },
       [](const Value& v, int) -> Value { return wrap_outer_132(as_perm(v)); }},
      {"prop14", Kind::Perm, Kind::Decomp, "k", false,
       [](const Value& v, int) -> Value { return split_132_by_gap(as_perm(v)); },
       [](const Value& v, int) -> Value {
         const auto& d = as_decomp(v);
         return join_132_by_gap(d.rho, sigma_of(d));
       }},
      {"one321", Kind::Perm, Kind::Decomp, "b", false,
       [](const Value& v, int) -> Value { return split_one_321(as_perm(v)); },
       [](const Value& v, int) -> Value {
         const auto& d = as_decomp(v);
         return join_one_321(d.rho, sigma_of(d));
       }},
      {"two321-b", Kind::Perm, Kind::Decomp, "b", false,
       [](const Value& v, int) -> Value { return split_two_321_common_b(as_perm(v)); },
       [](const Value& v, int) -> Value {
         const auto& d = as_decomp(v);
         return join_two_321_common_b(d.rho, sigma_of(d));
       }},
      {"two321-k", Kind::Perm, Kind::Decomp, "k", false,
       [](const Value& v, int) -> Value { return split_two_321_distinct_b(as_perm(v)); },
       [](const Value& v, int) -> Value {
         const auto& d = as_decomp(v);
         return join_two_321_distinct_b(d.rho, sigma_of(d));
       }},
      {"phi", Kind::Perm, Kind::Perm, "", true,
       [](const Value& v, int i) -> Value { return tail_phi(as_perm(v), i); },
       [](const Value& v, int i) -> Value { return tail_phi_inverse(as_perm(v), i); }},
      {"returns", Kind::Path, Kind::Returns, "", false,
       [](const Value& v, int) -> Value { return delete_returns(as_path(v)); },
       [](const Value& v, int) -> Value {
         const auto& r = std::get<ReturnsDeletion>(v);
         return insert_returns(r.path, r.returns);
       }},
      {"nonfinal", Kind::Path, Kind::Path, "", true,
       [](const Value& v, int i) -> Value { return transfer_nonfinal(as_path(v), i); },
       [](const Value& v, int i) -> Value { return untransfer_nonfinal(as_path(v), i); }},
  };
  return specs;
}

std::string map_names() {
  std::string s;
  for (const auto& m : map_specs()) s += (s.empty() ? "" : "|") + m.name;
  return s;
}

const MapSpec& find_map(const std::string& name) {
  for (const auto& m : map_specs())
    if (m.name == name) return m;
  throw InvalidInput("unknown map '" + name + "'; expected " + map_names());
}

bool looks_like_json(std::string_view s) {
  const auto i = s.find_first_not_of(" \t\n");
  return i != std::string_view::npos && (s[i] == '[' || s[i] == '{');
}

Permutation read_perm(const std::string& text) {
  if (looks_like_json(text)) return pj::decode_permutation(json::parse(text));
  return parse_permutation(text);
}

LatticePath read_path(const std::string& text) {
  if (looks_like_json(text)) return pj::decode_path(json::parse(text));
  return LatticePath::parse(text);
}

struct BijectArgs {
  std::string name;
  std::string input;
  std::string sigma;
  std::optional<int> param;
  bool inverse = false;
  bool roundtrip = false;
  std::string format = "text";
};

int need_param(const BijectArgs& a, const char* what) {
  if (!a.param) throw InvalidInput(std::string("--param is required: ") + what);
  return *a.param;
}

Value read_value(Kind k, const BijectArgs& a) {
  switch (k) {
    case Kind::Perm:
      return read_perm(a.input);
    case Kind::Path:
      return read_path(a.input);
    case Kind::Decomp: {
      if (looks_like_json(a.input)) {
        auto j = json::parse(a.input);
        if (j.is_object()) return pj::decode_decomposition(j);
      }
      Decomposition d;
      d.rho = read_perm(a.input);
      if (!a.sigma.empty()) d.sigma = read_perm(a.sigma);
      if (a.param) d.param = *a.param;
      return d;
    }
    case Kind::Returns:
      return ReturnsDeletion{read_path(a.input), need_param(a, "number of returns to insert")};
  }
  return {};
}

std::string join_ints(std::span<const int> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

json encode_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ReturnsDeletion>)
          return {{"path", pj::encode(x.path)}, {"returns", x.returns}};
        else
          return pj::encode(x);
      },
      v);
}

void write_text(std::ostream& out, const Value& v, const char* param_label) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Permutation>) {
          out << to_string(x) << '\n';
        } else if constexpr (std::is_same_v<T, LatticePath>) {
          out << x.to_string() << '\n';
          if (x.dyck() && !x.empty()) {
            const auto st = path_stats(x);
            out << "ascents: " << join_ints(st.ascent_seq) << '\n';
            out << "descents: " << join_ints(st.descent_seq) << '\n';
          }
        } else if constexpr (std::is_same_v<T, Decomposition>) {
          out << "rho: " << to_string(x.rho) << '\n';
          if (x.sigma) out << "sigma: " << to_string(*x.sigma) << '\n';
          out << (*param_label ? param_label : "param") << ": " << x.param << '\n';
        } else {
          out << x.path.to_string() << '\n' << "returns: " << x.returns << '\n';
        }
      },
      v);
}

int cmd_biject(const BijectArgs& a, std::ostream& out) {
  const MapSpec& m = find_map(a.name);
  const Kind in_kind = a.inverse ? m.to : m.from;
  const Value input = read_value(in_kind, a);
  const int param = m.takes_param ? need_param(a, "this map takes i") : 0;
  const auto& apply = a.inverse ? m.inverse : m.forward;
  const auto& undo = a.inverse ? m.forward : m.inverse;

  const Value image = apply(input, param);
  std::optional<bool> round;
  if (a.roundtrip) round = undo(image, param) == input;

  const char* label = a.inverse ? "" : m.param_label;
  if (a.format == "json") {
    json j = {{"map", m.name}, {"direction", a.inverse ? "inverse" : "forward"},
              {"input", encode_value(input)}, {"output", encode_value(image)}};
    if (const auto* p = std::get_if<LatticePath>(&image); p && p->dyck() && !p->empty()) {
      const auto st = path_stats(*p);
      j["ascents"] = st.ascent_seq;
      j["descents"] = st.descent_seq;
    }
    if (round) j["roundtrip"] = *round;
    out << j.dump() << '\n';
  } else {
    write_text(out, image, label);
    if (round) out << "roundtrip: " << (*round ? "ok" : "FAILED") << '\n';
  }
  return round && !*round ? kMismatch : kOk;
}

// --- counting ------------------------------------------------------------------

Family family_arg(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw Unsupported("unknown family '" + name + "'");
  return *f;
}

std::string family_list() {
  std::string s;
  for (Family f : all_families()) s += (s.empty() ? "" : ", ") + family_name(f);
  return s;
}

struct CountRow {
  int n;
  BigInt formula;
  std::optional<BigInt> oracle;
  bool match() const { return !oracle || *oracle == formula; }
};

CountRow count_row(Family f, int n, const std::string& mode, const oracle::Limits& limits) {
  CountRow r{n, 0, std::nullopt};
  if (mode != "oracle") r.formula = count(f, n);
  if (mode != "formula") r.oracle = oracle::oracle_count(f, n, limits);
  if (mode == "oracle") r.formula = *r.oracle;
  return r;
}

int cmd_count(Family f, int n, const std::string& mode, const std::string& format, const oracle::Limits& limits,
              std::ostream& out) {
  const auto r = count_row(f, n, mode, limits);
  if (format == "json") {
    json j = {{"family", family_name(f)}, {"n", n}, {"mode", mode}};
    j["formula"] = mode == "oracle" ? json(nullptr) : pj::from_bigint(r.formula);
    j["oracle"] = r.oracle ? pj::from_bigint(*r.oracle) : json(nullptr);
    j["match"] = mode == "both" ? json(r.match()) : json(nullptr);
    out << j.dump() << '\n';
  } else if (mode == "both") {
    out << r.formula.str() << " / " << r.oracle->str() << " / " << (r.match() ? "match" : "mismatch") << '\n';
  } else {
    out << (r.oracle ? r.oracle->str() : r.formula.str()) << '\n';
  }
  return r.match() ? kOk : kMismatch;
}

int cmd_table(Family f, int nmin, int nmax, const std::string& mode, const std::string& format,
              const oracle::Limits& limits, std::ostream& out) {
  if (nmin > nmax) throw InvalidInput("--nmin must not exceed --nmax");
  std::vector<CountRow> rows;
  for (int n = nmin; n <= nmax; ++n) rows.push_back(count_row(f, n, mode, limits));
  bool all_match = true;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"family", family_name(f)},
                     {"formula", pj::from_bigint(r.formula)},
                     {"oracle", r.oracle ? pj::from_bigint(*r.oracle) : json(nullptr)},
                     {"match", r.oracle ? json(r.match()) : json(nullptr)}});
      all_match = all_match && r.match();
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "n,family,formula,oracle,match\n";
    for (const auto& r : rows) {
      out << r.n << ',' << family_name(f) << ',' << r.formula.str() << ',';
      if (r.oracle) out << r.oracle->str() << ',' << (r.match() ? "match" : "mismatch");
      else out << ',';
      out << '\n';
      all_match = all_match && r.match();
    }
  }
  return all_match ? kOk : kMismatch;
}

// --- enumerate -------------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  std::string filter;
  std::vector<std::string> presets;
  std::string object;  // "", "perm" or "dyck"
  std::string format = "text";
};

void apply_preset(const std::string& name, ParsedFilter& pf) {
  if (name == "last2up") {
    pf.perm.last_increasing(2);
  } else if (auto f = parse_family(name)) {
    pf.perm.where(name, [ff = oracle::family_filter(*f)](std::span<const int> w) { return ff(w); });
  } else {
    throw InvalidInput("unknown filter preset '" + name + "'; expected last2up or a family name (" +
                       family_list() + ")");
  }
  ++pf.perm_atoms;
}

int cmd_enumerate(const EnumerateArgs& a, const oracle::Limits& limits, std::ostream& out) {
  ParsedFilter pf;
  for (const auto& p : a.presets) apply_preset(p, pf);
  if (!a.filter.empty()) parse_filter(a.filter, pf);

  std::string object = a.object;
  if (object.empty()) object = pf.path_atoms > 0 ? "dyck" : "perm";
  if (object == "perm" && pf.path_atoms > 0)
    throw InvalidInput("height<= applies to Dyck paths; use --object dyck");
  if (object == "dyck" && pf.perm_atoms > 0)
    throw InvalidInput("permutation conditions cannot filter Dyck paths");

  const bool as_json = a.format == "json";
  if (object == "perm") {
    oracle::PermStream stream(a.n, pf.perm, limits);
    while (auto p = stream.next()) out << (as_json ? pj::encode(*p).dump() : to_string(*p)) << '\n';
  } else {
    if (a.n > limits.max_path_n)
      throw ResourceLimit("Dyck path semilength " + std::to_string(a.n) + " exceeds the cap of " +
                          std::to_string(limits.max_path_n));
    oracle::PathStream stream(a.n, a.n, 0, 2 * a.n, pf.path);
    while (auto d = stream.next()) out << (as_json ? pj::encode(*d).dump() : d->to_string()) << '\n';
  }
  return kOk;
}

// --- verify --------------------------------------------------------------------

int cmd_verify(verify::Suite suite, int nmax, const std::string& format, std::ostream& out) {
  const auto report = verify::run(suite, nmax);
  std::size_t passed = 0;
  for (const auto& c : report) passed += c.passed();
  if (format == "json") {
    json checks = json::array();
    for (const auto& c : report)
      checks.push_back(
          {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"samples", c.samples}});
    out << json{{"suite", verify::suite_name(suite)},
                {"nmax", nmax},
                {"passed", passed},
                {"failed", report.size() - passed},
                {"checks", checks}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& c : report) {
      out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
      if (!c.passed()) out << ", " << c.failures << " failed";
      out << ")\n";
      for (const auto& s : c.samples) out << "    " << s << '\n';
    }
    out << verify::suite_name(suite) << ": " << passed << " of " << report.size() << " checks passed\n";
  }
  return passed == report.size() ? kOk : kMismatch;
}

}  // namespace

// --- entry point -----------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, bijections and brute-force checks for permutations with few 3-letter "
               "pattern occurrences.",
               "permpath"};
  app.require_subcommand(1);
  app.fallthrough();

  oracle::Limits limits;
  std::string out_file;
  app.add_option("--out", out_file, "Write data output to this file instead of stdout");
  app.add_option("--perm-cap", limits.max_perm_n, "Largest n for full scans of S_n")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--pruned-cap", limits.max_pruned_n, "Largest n for pruned few-occurrence scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--path-cap", limits.max_path_n, "Largest semilength for path scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  const auto family_check = CLI::Validator(
      [](std::string& s) -> std::string {
        return parse_family(s) ? "" : "unknown family '" + s + "'; expected one of " + family_list();
      },
      "FAMILY");
  const auto format_check = [](std::vector<std::string> allowed) { return CLI::IsMember(std::move(allowed)); };

  // count
  std::string c_family, c_mode = "formula", c_format = "text";
  int c_n = 0;
  auto* count_cmd = app.add_subcommand("count", "Count one family at one n");
  count_cmd->add_option("--family", c_family, "Family name")->required()->check(family_check);
  count_cmd->add_option("--n", c_n, "Permutation length")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--mode", c_mode, "formula, oracle or both")
      ->check(format_check({"formula", "oracle", "both"}))
      ->capture_default_str();
  count_cmd->add_option("--format", c_format)->check(format_check({"text", "json"}))->capture_default_str();

  // table
  std::string t_family, t_mode = "formula", t_format = "csv";
  int t_nmin = 1, t_nmax = 0;
  auto* table_cmd = app.add_subcommand("table", "Tabulate a family over a range of n");
  table_cmd->add_option("--family", t_family, "Family name")->required()->check(family_check);
  table_cmd->add_option("--nmax", t_nmax)->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--nmin", t_nmin)->check(CLI::PositiveNumber)->capture_default_str();
  table_cmd->add_option("--mode", t_mode, "formula or both")
      ->check(format_check({"formula", "both"}))
      ->capture_default_str();
  table_cmd->add_option("--format", t_format)->check(format_check({"csv", "json"}))->capture_default_str();

  // enumerate
  EnumerateArgs e;
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream the permutations or Dyck paths passing a filter");
  enum_cmd->add_option("--n", e.n, "Permutation length or Dyck semilength")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--filter", e.filter,
                       "Conjunction (&&) of pattern(<word>)==<k>, first>=<k>, last_inc(<i>), "
                       "pos_of_max<=<k>, height<=<h>");
  enum_cmd->add_option("--filter-preset", e.presets, "last2up or a family name; repeatable");
  enum_cmd->add_option("--object", e.object, "perm or dyck")->check(format_check({"perm", "dyck"}));
  enum_cmd->add_option("--format", e.format)->check(format_check({"text", "json"}))->capture_default_str();

  // biject
  BijectArgs b;
  auto* biject_cmd = app.add_subcommand("biject", "Apply a bijection or its inverse");
  biject_cmd->add_option("--name", b.name)->required()->check(CLI::Validator(
      [](std::string& s) -> std::string {
        for (const auto& m : map_specs())
          if (m.name == s) return "";
        return "unknown map '" + s + "'; expected " + map_names();
      },
      "MAP"));
  biject_cmd->add_option("--input", b.input, "Permutation, path, or JSON decomposition")->required();
  biject_cmd->add_option("--sigma", b.sigma, "Second component when inverting a pair decomposition");
  biject_cmd->add_option("--param", b.param, "i for phi and nonfinal; k or returns for inverses");
  biject_cmd->add_flag("--inverse", b.inverse, "Apply the inverse map");
  biject_cmd->add_flag("--roundtrip", b.roundtrip, "Apply the opposite map to the image and compare");
  biject_cmd->add_option("--format", b.format)->check(format_check({"text", "json"}))->capture_default_str();

  // verify
  std::string v_suite = "all", v_format = "text";
  int v_nmax = 8;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("--suite", v_suite)
      ->check(format_check({"formulas", "bijections", "identities", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--nmax", v_nmax, "Largest permutation size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--format", v_format)->check(format_check({"text", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::ofstream file;
    if (!out_file.empty()) {
      file.open(out_file);
      if (!file) {
        err << "error: cannot open " << out_file << " for writing\n";
        return kUsage;
      }
    }
    std::ostream& data = out_file.empty() ? out : file;

    if (*count_cmd) return cmd_count(family_arg(c_family), c_n, c_mode, c_format, limits, data);
    if (*table_cmd) return cmd_table(family_arg(t_family), t_nmin, t_nmax, t_mode, t_format, limits, data);
    if (*enum_cmd) return cmd_enumerate(e, limits, data);
    if (*biject_cmd) return cmd_biject(b, data);
    if (*verify_cmd) return cmd_verify(*verify::parse_suite(v_suite), v_nmax, v_format, data);
    return kUsage;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kDomain;
  } catch (const ResourceLimit& ex) {
    err << "error: " << ex.what() << '\n';
    return kResource;
  } catch (const InvalidInput& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const Unsupported& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& ex) {
    err << "error: bad JSON input: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"permpath"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace permpath::cli
