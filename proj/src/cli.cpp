#include "hbsums/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "hbsums/classical_sums.hpp"
#include "hbsums/errors.hpp"
#include "hbsums/serialize.hpp"
#include "hbsums/theorems.hpp"
#include "hbsums/twisted_bernoulli.hpp"
#include "hbsums/verify.hpp"
#include "hbsums/volkenborn.hpp"

namespace hbsums::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == s.size() && !s.empty(), "malformed " + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

std::vector<Rational> parse_coeffs(const std::string& text) {
  require(!text.empty(), "--coeffs needs at least one coefficient");
  std::vector<Rational> out;
  for (const auto& c : split(text, ',')) out.push_back(parse_rational(c));
  return out;
}

// CSV for anything that is not an audit or a branch report: the flattened
// JSON object as one header row and one value row.
std::string generic_csv(const nlohmann::json& j) {
  const nlohmann::json flat = j.flatten();
  std::string header, row;
  for (const auto& [key, value] : flat.items()) {
    header += (header.empty() ? "" : ",") + key;
    row += (row.empty() ? "" : ",") + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return header + "\n" + row + "\n";
}

struct Output {
  std::string format = "json";
  std::string path;
};

void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  require(static_cast<bool>(f), "cannot open output file '" + o.path + "'");
  f << text;
}

std::string render(const Output& o, const nlohmann::json& j) {
  return o.format == "csv" ? generic_csv(j) : j.dump() + "\n";
}

CycloElement root_of_unity(long p, long level, long precision) {
  CycloOptions opts{std::max(1L, level)};
  return level == 0 ? CycloElement::constant(p, 0, Rational(1), precision, opts)
                    : CycloElement::zeta(p, level, precision, opts);
}

}  // namespace

Rational parse_q(const std::string& raw, long p) {
  const std::string text = trim(raw);
  require(!text.empty(), "empty q");
  const auto caret = text.find('^');
  if (caret != std::string::npos) {
    require(text.rfind("1+", 0) == 0, "q shorthand must look like 1+p^M, got '" + text + "'");
    const std::string base = text.substr(2, caret - 2);
    const long M = parse_long(text.substr(caret + 1), "exponent in q");
    require(base == "p" || parse_long(base, "base in q") == p, "q shorthand base must be p = " + std::to_string(p));
    require(M >= 1, "q = 1+p^M needs M >= 1");
    return Rational(1) + Rational(p_power(p, M));
  }
  if (text.find(',') != std::string::npos) {
    Integer acc = 0, scale = 1;
    for (const auto& d : split(text, ',')) {
      const long digit = parse_long(d, "q digit");
      require(digit >= 0 && digit < p, "q digits must lie in 0..p-1");
      acc += scale * digit;
      scale *= p;
    }
    return Rational(acc);
  }
  return parse_rational(text);
}

std::vector<long> parse_prime_set(const std::string& raw) {
  std::string text = trim(raw);
  if (!text.empty() && text.front() == '{') {
    require(text.back() == '}', "unbalanced braces in prime set '" + raw + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<long> out;
  for (const auto& s : split(text, ',')) {
    const long p = parse_long(s, "prime");
    require_odd_prime(p);
    out.push_back(p);
  }
  require(!out.empty(), "prime set is empty");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Dedekind, Apostol and Hardy-Berndt sums, p-adic integrals and twisted q-Bernoulli numbers"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  Output o;
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.path, "write the result to this file");

  auto fall = [](CLI::App* s) {
    s->fallthrough();
    return s;
  };

  long h = 0, k = 0, n = 0, m = 0, p = 0, M = 0, level = 0, N = -1, T = -1, precision = 20, periods = 0;
  std::string kind_name, q_text, integrand = "sawtooth", coeffs, z_text, suite;
  std::vector<std::string> grid;
  bool series_flag = false;

  auto* dedekind = fall(app.add_subcommand("dedekind", "s(h,k)"));
  dedekind->add_option("h", h)->required();
  dedekind->add_option("k", k)->required();

  auto* apostol = fall(app.add_subcommand("apostol", "s(h,k,n)"));
  apostol->add_option("h", h)->required();
  apostol->add_option("k", k)->required();
  apostol->add_option("n", n)->required();

  auto* hardy = fall(app.add_subcommand("hardy", "Hardy-Berndt sum S, S2, S3 or S5"));
  hardy->add_option("kind", kind_name)->required();
  hardy->add_option("h", h)->required();
  hardy->add_option("k", k)->required();
  hardy->add_option("--periods", periods, "also sum the tangent series over this many periods (float)");

  auto* integrate = fall(app.add_subcommand("integrate", "p-adic integrals"));
  integrate->require_subcommand(1);
  auto* fermionic = fall(integrate->add_subcommand("fermionic", "fermionic integral"));
  fermionic->add_option("--integrand", integrand, "sawtooth, sign or poly")
      ->check(CLI::IsMember({"sawtooth", "sign", "poly"}));
  fermionic->add_option("--h", h);
  fermionic->add_option("--k", k);
  fermionic->add_option("--coeffs", coeffs, "polynomial coefficients c0,c1,...");
  fermionic->add_option("--p", p);
  fermionic->add_option("--N", N, "truncation level; omit for the limit");
  auto* volkenborn = fall(integrate->add_subcommand("volkenborn", "bosonic integral of a polynomial"));
  volkenborn->add_option("--coeffs", coeffs, "polynomial coefficients c0,c1,...")->required();
  auto* qint = fall(integrate->add_subcommand("q", "truncated q-integral of w^x q^x x^n"));
  qint->add_option("--p", p)->required();
  qint->add_option("--q", q_text)->required();
  qint->add_option("--w-level", level);
  qint->add_option("--n", n);
  qint->add_option("--N", N)->required();
  qint->add_option("--precision", precision);

  auto* tb = fall(app.add_subcommand("twisted-bernoulli", "b*_{n,w}(q) with q = 1+p^M, w = zeta_{p^level}"));
  tb->add_option("p", p)->required();
  tb->add_option("M", M)->required();
  tb->add_option("level", level)->required();
  tb->add_option("n", n)->required();
  tb->add_option("--q", q_text, "override q");
  tb->add_option("--T", T, "series order (default n)");
  tb->add_option("--precision", precision, "target p-adic digits");
  tb->add_option("--z", z_text, "evaluate the polynomial b*_{n,w}(z,q)");
  tb->add_flag("--series", series_flag, "dump the generating series with its precision ledger");

  auto* td = fall(app.add_subcommand("twisted-dedekind", "s_w(h,k,m,q) with q = 1+p^M"));
  td->add_option("h", h)->required();
  td->add_option("k", k)->required();
  td->add_option("m", m)->required();
  td->add_option("p", p)->required();
  td->add_option("M", M)->required();
  td->add_option("level", level)->required();
  td->add_option("--q", q_text, "override q");
  td->add_option("--precision", precision, "target p-adic digits");

  auto* verify = fall(app.add_subcommand("verify", "run an identity suite"));
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));

  auto* audit = fall(app.add_subcommand("audit", "audit every identity over a parameter grid"));
  audit->add_option("--grid", grid, "kmax and a prime set such as {3,5,7}")->expected(2)->required();
  audit->add_option("--periods", periods, "tangent-series periods for the sawtooth audit");
  long extra_precision = 0;
  audit->add_option("--precision", extra_precision, "extra p-adic digits for the reduction audits");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }

  try {
    require(o.format == "json" || o.format == "csv", "--format must be json or csv");
    if (dedekind->parsed()) {
      emit(o, render(o, {{"value", to_string(dedekind_sum(CoprimePair(h, k)))}}), out);
    } else if (apostol->parsed()) {
      emit(o, render(o, {{"value", to_string(apostol_sum(CoprimePair(h, k), n))}}), out);
    } else if (hardy->parsed()) {
      const HardyKind kind = parse_hardy_kind(kind_name);
      const CoprimePair pair(h, k);
      nlohmann::json j = {{"value", to_string(hardy_sum(kind, pair))}};
      if (periods > 0) {
        const TrigSeriesPartial s = trig_series_partial(kind, pair, periods);
        j["series_value_float"] = format_double(s.value);
        j["series_raw_partial_float"] = format_double(s.raw_partial);
        j["series_last_block_float"] = format_double(s.last_block_magnitude);
      }
      emit(o, render(o, j), out);
    } else if (fermionic->parsed()) {
      if (integrand == "poly") {
        const Polynomial f{parse_coeffs(coeffs)};
        if (N >= 0) {
          require_odd_prime(p);
          emit(o, render(o, {{"value", to_string(fermionic_trunc(f, p, N))}}), out);
        } else {
          emit(o, render(o, {{"value", to_string(fermionic_poly(f))}}), out);
        }
      } else {
        const CoprimePair pair(h, k);
        const PeriodicFn f = integrand == "sawtooth" ? sawtooth_table(pair.h(), pair.k())
                                                     : sign_table(pair.h(), pair.k());
        require_odd_prime(p);
        if (N >= 0) {
          emit(o, render(o, {{"value", to_string(fermionic_trunc(f, p, N))}}), out);
        } else {
          const FermionicLimitReport rep = fermionic_periodic_closed(f, p);
          emit(o, o.format == "csv" ? fermionic_report_csv(rep) : to_json_value(rep).dump() + "\n", out);
        }
      }
    } else if (volkenborn->parsed()) {
      emit(o, render(o, {{"value", to_string(volkenborn_poly(Polynomial{parse_coeffs(coeffs)}))}}), out);
    } else if (qint->parsed()) {
      require_odd_prime(p);
      require(N >= 0, "--N must be >= 0");
      require(n >= 0, "--n must be >= 0");
      require(precision >= 1, "--precision must be >= 1");
      const Rational q = parse_q(q_text, p);
      require(q != 1, "q = 1 is not allowed");
      const long vq = valuation(p, Rational(q - 1));
      require(vq >= 1, "q must satisfy v_p(q - 1) >= 1");
      const long working = q_truncation_precision(precision, N, vq);
      const PadicNumber qp = PadicNumber::from_rational(p, q, working);
      const TwistedMonomial f{n, qp, root_of_unity(p, level, working)};
      emit(o, render(o, {{"value", to_json_value(volkenborn_q_trunc(f, p, N, qp))}}), out);
    } else if (tb->parsed()) {
      require_odd_prime(p);
      require(M >= 1, "M must be >= 1");
      const Rational q = q_text.empty() ? Rational(1) + Rational(p_power(p, M)) : parse_q(q_text, p);
      auto ctx = TwistedBernoulliContext::create(p, q, level, std::max(T, n), precision,
                                                 CycloOptions{std::max(1L, level)});
      require(n >= 0, "n must be >= 0");
      nlohmann::json j = {{"p", p}, {"q", to_string(q)}, {"w_level", level}, {"n", n},
                          {"working_precision", ctx.working_precision()}};
      if (!z_text.empty()) {
        const Rational z = parse_rational(z_text);
        j["z"] = to_string(z);
        j["value"] = to_json_value(twisted_bernoulli_poly(ctx, n, z));
      } else {
        j["value"] = to_json_value(twisted_bernoulli_number(ctx, n));
      }
      if (series_flag) j["series"] = to_json_value(gen_function_series(ctx));
      emit(o, render(o, j), out);
    } else if (td->parsed()) {
      require_odd_prime(p);
      require(M >= 1, "M must be >= 1");
      const Rational q = q_text.empty() ? Rational(1) + Rational(p_power(p, M)) : parse_q(q_text, p);
      const long vk = k > 0 ? valuation(p, Integer(k)) : 0;
      auto ctx = TwistedBernoulliContext::create(p, q, level, std::max(m, 1L), precision + (m + 1) * vk,
                                                 CycloOptions{std::max(1L, level)});
      const CycloElement s = twisted_dedekind_sum(TwistedDedekindParams::make(h, k, m, ctx));
      emit(o, render(o, {{"value", to_json_value(s)}, {"p", p}, {"q", to_string(q)}, {"w_level", level}}), out);
    } else if (verify->parsed()) {
      const std::vector<CheckResult> results = run_suite(suite);
      nlohmann::json j = nlohmann::json::array();
      bool all = true;
      for (const auto& r : results) {
        j.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        all = all && r.passed;
      }
      if (o.format == "csv") {
        std::string text = "check,passed,detail\n";
        for (const auto& r : results)
          text += r.name + "," + (r.passed ? "true" : "false") + ",\"" + r.detail + "\"\n";
        emit(o, text, out);
      } else {
        emit(o, j.dump() + "\n", out);
      }
      if (!all) {
        err << "error: suite " << suite << " has failing checks\n";
        return kCheckFailed;
      }
    } else if (audit->parsed()) {
      const long kmax = parse_long(grid.at(0), "grid kmax");
      const std::vector<long> primes = parse_prime_set(grid.at(1));
      AuditGridOptions opts;
      if (periods > 0) opts.series_periods = periods;
      opts.extra_precision = extra_precision;
      const std::vector<AuditReport> rows = run_audit_grid(kmax, primes, opts);
      if (o.format == "csv") {
        emit(o, audit_csv(rows), out);
      } else {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(to_json_value(r));
        emit(o, j.dump() + "\n", out);
      }
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecision;
  }
  return kOk;
}

}  // namespace hbsums::cli
