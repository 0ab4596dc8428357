#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclojones/bracket.hpp"
#include "cyclojones/cyclotomic.hpp"
#include "cyclojones/diagram.hpp"
#include "cyclojones/json_io.hpp"
#include "cyclojones/obstructions.hpp"
#include "cyclojones/sweep.hpp"
#include "cyclojones/wnk.hpp"

namespace cyclojones::cli {

using nlohmann::json;

namespace {

// "a..b" or a single integer "a".
IntRange parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    IntRange r{std::stoll(lo, &used), 0};
    if (used != lo.size()) throw std::invalid_argument(text);
    r.hi = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    if (r.hi < r.lo) throw DomainError("empty range " + text);
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed range '" + text + "', expected a..b");
  } catch (const std::out_of_range&) {
    throw DomainError("range '" + text + "' out of bounds");
  }
}

void print_poly(std::ostream& out, const LaurentPoly& p, const std::string& format) {
  if (format == "json")
    out << poly_to_json(p).dump() << '\n';
  else
    out << to_string(p) << '\n';
}

json optional_json(const std::optional<std::int64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

struct Options {
  std::int64_t n = 0, k = 0;
  std::string variable = "t";
  std::string format = "text";
  std::string n_range = "-10..20";
  std::string k_range = "0..0";
  std::int64_t k_max = 1;
  std::int64_t index = 1;
  bool sym = false;
  std::int64_t m = 1;
  std::int64_t max = 60;
  std::string poly;
  std::int64_t p = 3;
  bool serial = false;
  std::string inject_fault;
};

int cmd_jones(const Options& o, std::ostream& out) {
  FamilyParams p(o.n, o.k);
  if (o.variable == "A")
    print_poly(out, jones_to_bracket(p, jones_wnk(p)), o.format);
  else
    print_poly(out, jones_wnk(p), o.format);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.exec = o.serial ? Execution::serial : Execution::parallel;
  if (!o.inject_fault.empty()) {
    auto comma = o.inject_fault.find(',');
    if (comma == std::string::npos) throw DomainError("--inject-fault expects n,k");
    vo.inject_fault = FamilyParams(std::stoll(o.inject_fault.substr(0, comma)),
                                   std::stoll(o.inject_fault.substr(comma + 1)));
  }
  const IntRange n_range = parse_range(o.n_range);
  const IntRange k_range = parse_range(o.k_range);
  if (k_range.lo < 0) throw DomainError("k range must be non-negative");
  const auto cells = verify_grid(n_range, k_range, vo);
  const auto agree = std::count_if(cells.begin(), cells.end(),
                                   [](const VerifyCell& c) { return c.agree; });
  const bool ok = agree == static_cast<std::ptrdiff_t>(cells.size());
  if (o.format == "json") {
    json mismatches = json::array();
    for (const auto& c : cells)
      if (!c.agree)
        mismatches.push_back({{"n", c.params.n}, {"k", c.params.k}, {"detail", c.detail}});
    out << json{{"ok", ok}, {"agree", agree}, {"total", cells.size()},
                {"mismatches", mismatches}}.dump()
        << '\n';
  } else {
    for (const auto& c : cells)
      if (!c.agree) out << "MISMATCH " << to_string(c.params) << ": " << c.detail << '\n';
    out << (ok ? "OK " : "FAIL ") << agree << '/' << cells.size() << '\n';
  }
  return ok ? kExitOk : kExitInconsistent;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (o.k_max < 1) throw DomainError("--k-max must be >= 1");
  const IntRange n_range = parse_range(o.n_range);
  json rows = json::array();
  std::ostringstream text;
  for (std::int64_t k = 1; k <= o.k_max; ++k) {
    for (std::int64_t n = n_range.lo; n <= n_range.hi; ++n) {
      FamilyParams p(n, k);
      SymmetryClass cls = classify_symmetry(p);
      const std::string name = cls.symmetric() ? phi_tilde_name(*cls.m) : "";
      std::optional<std::int64_t> bound;
      if (p.n >= 0 && p.n + p.k > 0) bound = crossing_bound(p);
      rows.push_back({{"n", n},
                      {"k", k},
                      {"family", family_name(cls.family)},
                      {"m", optional_json(cls.m)},
                      {"polynomial", cls.symmetric() ? json(name) : json(nullptr)},
                      {"crossing_bound", optional_json(bound)}});
      if (cls.symmetric())
        text << std::left << std::setw(10) << to_string(p) << std::setw(15)
             << family_name(cls.family) << "m=" << std::setw(6) << *cls.m << name << '\n';
    }
  }
  if (o.format == "json")
    out << rows.dump() << '\n';
  else
    out << text.str();
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto rows = generate_table(o.k_max);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(table_row_to_json(row));
    out << arr.dump() << '\n';
    return kExitOk;
  }
  out << std::left << std::setw(10) << "K" << std::setw(16) << "V_K" << std::setw(15)
      << "family" << "c(K) <=" << '\n';
  for (const auto& row : rows)
    out << std::left << std::setw(10) << to_string(row.params) << std::setw(16)
        << row.polynomial_name << std::setw(15) << family_name(row.classification.family)
        << row.crossing_bound << '\n';
  return kExitOk;
}

int cmd_phi(const Options& o, std::ostream& out) {
  print_poly(out, o.sym ? phi_sym(o.index) : phi(o.index), o.format);
  return kExitOk;
}

int cmd_phitilde(const Options& o, std::ostream& out) {
  print_poly(out, phi_tilde(o.m), o.format);
  return kExitOk;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  if (!o.poly.empty()) {
    const SpecialValueReport r = special_value_check(parse_poly(o.poly));
    if (o.format == "json") {
      out << json{{"at_one", r.at_one.get_str()},
                  {"derivative_at_one", r.derivative_at_one.get_str()},
                  {"at_zeta3_is_one", r.at_zeta3_is_one},
                  {"at_i_value", r.at_i_value ? json(*r.at_i_value) : json(nullptr)},
                  {"at_zeta6_exponent",
                   r.at_zeta6_exponent ? json(*r.at_zeta6_exponent) : json(nullptr)},
                  {"passes_all", r.passes_all}}.dump()
          << '\n';
    } else {
      out << "V(1)=" << r.at_one << " V'(1)=" << r.derivative_at_one
          << " V(zeta3)=1:" << (r.at_zeta3_is_one ? "yes" : "no") << " V(i)="
          << (r.at_i_value ? std::to_string(*r.at_i_value) : "not +-1") << " V(zeta6)="
          << (r.at_zeta6_exponent ? (*r.at_zeta6_sign > 0 ? "+" : "-") +
                                        std::string("(i sqrt3)^") +
                                        std::to_string(*r.at_zeta6_exponent)
                                  : "not +-(i sqrt3)^s")
          << '\n'
          << (r.passes_all ? "passes" : "fails") << '\n';
    }
    return kExitOk;
  }
  const auto candidates = open_question_candidates(o.max);
  if (o.format == "json")
    out << json{{"max", o.max},
                {"candidates", candidates},
                {"realized", realized_orders(o.max)}}.dump()
        << '\n';
  else
    out << join(candidates) << '\n';
  return kExitOk;
}

int cmd_writhe(const Options& o, std::ostream& out) {
  FamilyParams p(o.n, o.k);
  const ArrowDiagramSummary s = wnk_summary(p);
  const std::int64_t closed = writhe_wnk(p);
  const std::int64_t summed = writhe_from_summary(s);
  if (closed != summed)
    throw InconsistencyError("writhe of " + to_string(p) + ": closed form " +
                             std::to_string(closed) + ", arrow formula " +
                             std::to_string(summed));
  if (o.format == "json")
    out << json{{"n", p.n}, {"k", p.k}, {"writhe", closed}, {"summary", summary_to_json(s)}}
               .dump()
        << '\n';
  else
    out << "w(" << to_string(p) << ")=" << closed << '\n';
  return kExitOk;
}

int cmd_mersenne(const Options& o, std::ostream& out) {
  // Above p = 19 the witness polynomials are too long to build.
  const MersenneWitness w = mersenne_knot(o.p, o.p <= 19);
  const std::string name = "Phi_sym_" + std::to_string(2 * w.mersenne);
  if (o.format == "json")
    out << json{{"p", w.exponent},
                {"N", w.mersenne},
                {"k", w.k},
                {"knots", {{w.even.n, w.even.k}, {w.odd.n, w.odd.k}}},
                {"polynomial", name},
                {"verified", o.p <= 19}}.dump()
        << '\n';
  else
    out << "N=" << w.mersenne << " k=" << w.k << " knots " << to_string(w.even) << ' '
        << to_string(w.odd) << " V=" << name << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jones polynomials of the knots W(n,k) and cyclotomic obstructions",
               "cyclojones"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"text", "json"});

  auto* jones = app.add_subcommand("jones", "Jones polynomial of W(n,k) (closed form)");
  jones->add_option("-n", o.n, "kink arrows")->required();
  jones->add_option("-k", o.k, "strand arrows")->required();
  jones->add_option("--variable", o.variable, "t for V(t), A for the bracket")
      ->check(CLI::IsMember({"t", "A"}));
  jones->add_option("--format", o.format)->check(formats);

  auto* verify = app.add_subcommand("verify", "closed form vs. skein recursion over a grid");
  verify->add_option("--n", o.n_range, "range a..b")->required();
  verify->add_option("--k", o.k_range, "range a..b")->required();
  verify->add_flag("--serial", o.serial, "use the serial reference kernels");
  verify->add_option("--inject-fault", o.inject_fault)->group("");
  verify->add_option("--format", o.format)->check(formats);

  auto* classify = app.add_subcommand("classify", "symmetry classification over a grid");
  classify->add_option("--k-max", o.k_max)->required();
  classify->add_option("--n", o.n_range, "range a..b")->capture_default_str();
  classify->add_option("--format", o.format)->check(formats);

  auto* table = app.add_subcommand("table", "the cyclotomic quadruplets for k = 1..k_max");
  table->add_option("--k-max", o.k_max)->required();
  table->add_option("--format", o.format)->check(formats);

  auto* phi_cmd = app.add_subcommand("phi", "cyclotomic polynomial Phi_N");
  phi_cmd->add_option("--index,-N", o.index)->required();
  phi_cmd->add_flag("--sym", o.sym, "symmetric form t^(-phi(N)/2) Phi_N");
  phi_cmd->add_option("--format", o.format)->check(formats);

  auto* phitilde = app.add_subcommand("phitilde", "alternating polynomial Phi_tilde_2m, m odd");
  phitilde->add_option("-m", o.m)->required();
  phitilde->add_option("--format", o.format)->check(formats);

  auto* obstruct = app.add_subcommand("obstruct", "open candidate orders, or special values");
  obstruct->add_option("--max", o.max)->capture_default_str();
  obstruct->add_option("--poly", o.poly, "check special values of this polynomial instead");
  obstruct->add_option("--format", o.format)->check(formats);

  auto* writhe = app.add_subcommand("writhe", "writhe of W(n,k), closed form and arrow formula");
  writhe->add_option("-n", o.n)->required();
  writhe->add_option("-k", o.k)->required();
  writhe->add_option("--format", o.format)->check(formats);

  auto* mersenne = app.add_subcommand("mersenne", "knots with Jones polynomial Phi_sym_2N, N = 2^p - 1");
  mersenne->add_option("-p", o.p)->required();
  mersenne->add_option("--format", o.format)->check(formats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*jones) return cmd_jones(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*table) return cmd_table(o, out);
    if (*phi_cmd) return cmd_phi(o, out);
    if (*phitilde) return cmd_phitilde(o, out);
    if (*obstruct) return cmd_obstruct(o, out);
    if (*writhe) return cmd_writhe(o, out);
    if (*mersenne) return cmd_mersenne(o, out);
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cyclojones::cli
