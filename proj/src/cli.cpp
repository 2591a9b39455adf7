#include "steinhaus/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "steinhaus/admissible.hpp"
#include "steinhaus/ap.hpp"
#include "steinhaus/errors.hpp"
#include "steinhaus/orders.hpp"
#include "steinhaus/search.hpp"

namespace steinhaus::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

json to_json(const Sequence& x) { return json(std::vector<residue_t>(x.terms().begin(), x.terms().end())); }

json to_json(const MultiplicityVector& mv) {
  return json(std::vector<std::uint64_t>(mv.counts().begin(), mv.counts().end()));
}

std::string join(std::span<const std::uint64_t> values, char sep = ' ') {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(values[k]);
  }
  return s;
}

Sequence read_sequence(const std::string& text, std::uint64_t n) {
  try {
    return parse_sequence(text, Modulus(n));
  } catch (const Error& e) {
    throw UsageError(std::string("--seq: ") + e.what());
  }
}

std::uint64_t default_max_states() {
  const char* env = std::getenv(kMaxStatesEnv);
  if (env == nullptr || *env == '\0') return kDefaultMaxStates;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc{} || ptr != end || v == 0) {
    throw UsageError(std::string(kMaxStatesEnv) + " must be a positive integer");
  }
  return v;
}

struct Options {
  std::string format = "text";
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string seq;
  std::uint64_t times = 1;
  std::uint64_t max = 0;
  std::uint64_t d = 1;
  std::uint64_t a = 0;
  std::string family = "beta";
  bool count_only = false;
  unsigned workers = 1;
  std::uint64_t max_states = 0;
  std::uint64_t max_m = 40;
};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_n(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Modulus n >= 1")->required()->check(CLI::PositiveNumber);
}

void emit(std::ostream& out, Format f, const json& j, const std::string& text) {
  if (f == Format::Json) {
    out << j.dump() << '\n';
  } else {
    out << text;
  }
}

}  // namespace

std::string render_triangle(const Triangle& t) {
  std::size_t width = 1;
  for (const Sequence& row : t.rows())
    for (residue_t v : row.terms()) width = std::max(width, std::to_string(v).size());
  // Keep the cell pitch even so each row can shift by exactly half a cell.
  const std::size_t gap = (width % 2 == 1) ? 1 : 2;
  const std::size_t half = (width + gap) / 2;

  std::ostringstream os;
  for (std::size_t r = 0; r < t.size(); ++r) {
    os << std::string(r * half, ' ');
    const Sequence& row = t.rows()[r];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << std::string(gap, ' ');
      std::string cell = std::to_string(row[j]);
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steinhaus triangles and balanced sequences over Z/nZ", "steinhaus"};
  app.require_subcommand(1, 1);
  Options o;

  auto* tri = app.add_subcommand("triangle", "Print the Steinhaus triangle of a sequence");
  auto* der = app.add_subcommand("derive", "Print the i-th derived sequence");
  auto* bal = app.add_subcommand("balanced", "Test a sequence for balance");
  for (auto* sub : {tri, der, bal}) {
    add_n(sub, o);
    sub->add_option("--seq", o.seq, "Comma-separated residues, e.g. 0,1,2,2")->required();
    add_format(sub, o);
  }
  der->add_option("--times", o.times, "Derivation order i")->capture_default_str();

  auto* alp = app.add_subcommand("alpha", "Multiplicative order of 2^n modulo odd n");
  auto* bet = app.add_subcommand("beta", "Projective multiplicative order of 2^n modulo odd n");
  for (auto* sub : {alp, bet}) {
    add_n(sub, o);
    add_format(sub, o);
  }

  auto* adm = app.add_subcommand("admissible", "Residue classes of admissible lengths");
  add_n(adm, o);
  adm->add_option("--max", o.max, "Also list every admissible m <= M");
  add_format(adm, o);

  auto* con = app.add_subcommand("construct", "Build a balanced arithmetic progression (odd n)");
  add_n(con, o);
  con->add_option("--m", o.m, "Length")->required()->check(CLI::PositiveNumber);
  con->add_option("--d", o.d, "Invertible common difference")->capture_default_str();
  con->add_option("--family", o.family, "Construction family")
      ->check(CLI::IsMember({"alpha", "beta"}))
      ->capture_default_str();
  con->add_option("--a", o.a, "Start term (alpha family)")->capture_default_str();
  add_format(con, o);

  auto* sea = app.add_subcommand("search", "Exhaustive search for balanced sequences");
  add_n(sea, o);
  sea->add_option("--m", o.m, "Length")->required()->check(CLI::PositiveNumber);
  sea->add_flag("--count-only", o.count_only, "Report the count only");
  sea->add_option("--workers", o.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(sea, o);

  auto* cls = app.add_subcommand("classify-even", "Balanced arithmetic progressions for even n");
  add_n(cls, o);
  cls->add_option("--max-m", o.max_m, "Largest length scanned")->capture_default_str();
  add_format(cls, o);

  auto* prb = app.add_subcommand("probe", "Decide existence of a balanced sequence of length m");
  add_n(prb, o);
  prb->add_option("--m", o.m, "Length")->required()->check(CLI::PositiveNumber);
  add_format(prb, o);

  for (auto* sub : {sea, prb}) {
    sub->add_option("--max-states", o.max_states,
                    std::string("Enumeration budget (default from ") + kMaxStatesEnv + " or 1e8)")
        ->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  const Format format = o.format == "json" ? Format::Json : Format::Text;
  try {
    SearchBudget budget;
    budget.workers = o.workers;
    if (sea->parsed() || prb->parsed()) {
      budget.max_states = o.max_states != 0 ? o.max_states : default_max_states();
    }

    if (tri->parsed()) {
      const Sequence x = read_sequence(o.seq, o.n);
      const Triangle t = triangle(x);
      json rows = json::array();
      for (const Sequence& r : t.rows()) rows.push_back(to_json(r));
      emit(out, format,
           {{"n", o.n}, {"m", x.size()}, {"seq", to_json(x)}, {"rows", rows},
            {"multiplicities", to_json(multiplicities(t))}},
           render_triangle(t));
    } else if (der->parsed()) {
      const Sequence x = read_sequence(o.seq, o.n);
      const Sequence y = derive_n(x, o.times);
      emit(out, format, {{"n", o.n}, {"m", y.size()}, {"seq", to_json(y)}},
           format_sequence(y) + "\n");
    } else if (bal->parsed()) {
      const Sequence x = read_sequence(o.seq, o.n);
      const bool balanced = is_balanced(x);
      const MultiplicityVector mv = multiplicities(x);
      emit(out, format,
           {{"n", o.n}, {"m", x.size()}, {"balanced", balanced}, {"multiplicities", to_json(mv)}},
           std::string(balanced ? "balanced" : "not balanced") + "\nmultiplicities " +
               join(mv.counts()) + "\n");
    } else if (alp->parsed()) {
      const std::uint64_t v = alpha(o.n);
      emit(out, format, {{"n", o.n}, {"alpha", v}}, std::to_string(v) + "\n");
    } else if (bet->parsed()) {
      const std::uint64_t v = beta(o.n);
      emit(out, format, {{"n", o.n}, {"beta", v}}, std::to_string(v) + "\n");
    } else if (adm->parsed()) {
      const AdmissibleClasses classes = admissible_classes(o.n);
      json j = {{"n", o.n}, {"period", classes.period}, {"classes", classes.residues}};
      std::string text = "period " + std::to_string(classes.period) + "\nclasses " +
                         join(classes.residues) + "\n";
      if (o.n % 2 == 1 && o.n >= 3) {
        const Fraction f = coverage_fraction(o.n);
        j["coverage"] = {{"numerator", f.numerator}, {"denominator", f.denominator}};
        text += "coverage " + std::to_string(f.numerator) + "/" + std::to_string(f.denominator) +
                "\n";
      }
      if (adm->count("--max") > 0) {
        std::vector<std::uint64_t> lengths;
        for (std::uint64_t m = 1; m <= o.max; ++m)
          if (is_admissible(o.n, m)) lengths.push_back(m);
        j["admissible"] = lengths;
        text += "admissible " + join(lengths) + "\n";
      }
      emit(out, format, j, text);
    } else if (con->parsed()) {
      ConstructionOptions opts;
      opts.d = o.d;
      opts.a = o.a;
      opts.family = o.family == "alpha" ? ConstructionFamily::Alpha : ConstructionFamily::Beta;
      const ArithmeticProgression ap = construct_balanced_ap(o.n, o.m, opts);
      const Sequence x = ap_sequence(ap);
      const MultiplicityVector mv = multiplicities(x);
      const bool balanced = is_balanced(x);
      emit(out, format,
           {{"n", o.n},
            {"m", x.size()},
            {"a", ap.first()},
            {"d", ap.difference()},
            {"seq", to_json(x)},
            {"balanced", balanced},
            {"multiplicities", to_json(mv)}},
           format_sequence(x) + "\n" + (balanced ? "balanced" : "not balanced") +
               "\nmultiplicities " + join(mv.counts()) + "\n");
    } else if (sea->parsed()) {
      const SearchReport r = brute_force_balanced(o.n, o.m, budget, o.count_only);
      json found = json::array();
      std::string text;
      for (const Sequence& s : r.found) {
        found.push_back(to_json(s));
        text += format_sequence(s) + "\n";
      }
      text += "count " + std::to_string(r.count) + "\nstates_examined " +
              std::to_string(r.states_examined) + "\n";
      emit(out, format,
           {{"n", r.n},
            {"m", r.m},
            {"found", found},
            {"count", r.count},
            {"states_examined", r.states_examined}},
           text);
    } else if (cls->parsed()) {
      const auto aps = classify_even_aps(o.n, o.max_m);
      json found = json::array();
      json list = json::array();
      std::string text;
      for (const auto& ap : aps) {
        const Sequence x = ap_sequence(ap);
        found.push_back(to_json(x));
        list.push_back({{"a", ap.first()}, {"d", ap.difference()}, {"m", ap.length()}});
        text += "AP(" + std::to_string(ap.first()) + "," + std::to_string(ap.difference()) + "," +
                std::to_string(ap.length()) + ") = " + format_sequence(x) + "\n";
      }
      text += "count " + std::to_string(aps.size()) + "\n";
      emit(out, format,
           {{"n", o.n}, {"found", found}, {"aps", list}, {"count", aps.size()}}, text);
    } else if (prb->parsed()) {
      const ProbeResult r = molluzzo_probe(o.n, o.m, budget);
      json j = {{"n", o.n},
                {"m", o.m},
                {"exists", r.exists},
                {"method", std::string(to_string(r.method))},
                {"states_examined", r.states_examined}};
      std::string text = std::string(r.exists ? "exists" : "none") + " (" +
                         std::string(to_string(r.method)) + ")\n";
      if (r.witness) {
        j["seq"] = to_json(*r.witness);
        text += format_sequence(*r.witness) + "\n";
      }
      emit(out, format, j, text);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace steinhaus::cli
