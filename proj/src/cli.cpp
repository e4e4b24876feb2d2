#include "qcorona/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include "json_codec.hpp"
#include "qcorona/corona.hpp"
#include "qcorona/io.hpp"

namespace qcorona::cli {

namespace {

using io::Json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Settings {
  std::string instance;
  std::string solution;
  std::string output;
  std::string point;
  std::size_t sample_points = 20;
  std::size_t minor_budget = kDefaultMinorBudget;
  std::string minor_order = "targeted";
  bool trace = false;

  CoronaOptions corona() const {
    CoronaOptions opts;
    opts.minors.budget = minor_budget;
    opts.minors.order = minor_order == "lex" ? MinorOrder::lexicographic : MinorOrder::targeted;
    return opts;
  }
};

Json hpoly_json(const HPoly& f) { return Json{{"text", to_string(f)}, {"coeffs", io::hpoly_coeffs_json(f)}}; }
Json cpoly_json(const CPoly& p) { return Json{{"text", to_string(p)}, {"coeffs", io::cpoly_coeffs_json(p)}}; }

Json sphere_json(const Sphere& s) {
  return Json{{"x", io::rat_json(s.x)}, {"y_squared", io::rat_json(s.y_squared)}, {"text", to_string(s)}};
}

std::string label(const std::string& prefix, std::size_t zero_based) {
  return prefix + std::to_string(zero_based + 1);
}

std::string shape(const PolyMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"shape", shape(m)}, {"entries", std::move(rows)}};
}

Quat parse_point(const std::string& text) {
  std::vector<Rat> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(parse_rat(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("--point needs 4 comma-separated rationals");
  return {parts[0], parts[1], parts[2], parts[3]};
}

// Deterministic Gaussian-rational sample points.
std::vector<GaussRat> sample_points(std::size_t count) {
  std::mt19937_64 rng(20140601);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<GaussRat> out;
  for (std::size_t k = 0; k < count; ++k) {
    Rat re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    out.emplace_back(re, im);
  }
  return out;
}

std::string zeros_text(const SphereZeros& z) {
  if (std::holds_alternative<SphericalZero>(z)) return "whole sphere";
  if (const auto* iso = std::get_if<IsolatedZero>(&z)) return "point " + to_string(iso->point);
  return "none";
}

void print_diagnosis(std::ostream& out, const io::Instance& inst, const Diagnosis& d) {
  if (d.rank_deficient_everywhere) {
    out << "(A,-B) is rank deficient everywhere\n";
    return;
  }
  bool named = false;
  for (const auto& s : d.spheres) {
    out << "sphere " << to_string(s.sphere) << ":";
    for (std::size_t l = 0; l < s.per_function.size(); ++l) {
      out << " " << inst.polynomials[l].name << " -> " << zeros_text(s.per_function[l]) << ";";
    }
    out << "\n";
    if (s.common_sphere) {
      out << "common zero: the whole sphere " << to_string(s.sphere) << "\n";
      named = true;
    }
    for (const auto& q : s.common_points) {
      out << "common zero: " << to_string(q) << " on sphere " << to_string(s.sphere) << "\n";
      named = true;
    }
  }
  if (d.unresolved.degree() > 0) {
    out << "unresolved factor (sphere data not rational): " << to_string(d.unresolved) << "\n";
  }
  if (!named) out << "common zero not located exactly\n";
}

class Commands {
 public:
  Commands(const Settings& s, std::ostream& out) : s_(s), out_(out) {}

  int star() {
    const auto inst = io::parse_instance(s_.instance);
    HPoly product{Quat(1)};
    for (const auto& p : inst.polynomials) product = product * p.poly;
    emit(Json{{"product", hpoly_json(product)}});
    return kOk;
  }

  int conj() {
    return per_polynomial([](const HPoly& f) { return Json{{"conjugate", hpoly_json(regular_conjugate(f))}}; });
  }

  int sym() {
    return per_polynomial([](const HPoly& f) { return Json{{"symmetrization", hpoly_json(symmetrization(f))}}; });
  }

  int eval() {
    const Quat q = parse_point(s_.point);
    return per_polynomial([&](const HPoly& f) {
      return Json{{"point", io::quat_json(q)}, {"value", io::quat_json(eval_hpoly(f, q))},
                  {"text", to_string(eval_hpoly(f, q))}};
    });
  }

  int split() {
    return per_polynomial([](const HPoly& f) {
      const auto p = qcorona::split(f);
      return Json{{"F", cpoly_json(p.F)}, {"G", cpoly_json(p.G)}};
    });
  }

  int zeros() {
    return per_polynomial([](const HPoly& f) {
      Json out;
      if (f.is_zero()) {
        out["error"] = "zero polynomial";
        return out;
      }
      const auto zs = classify_zeros(f);
      Json spherical = Json::array(), isolated = Json::array();
      for (const auto& s : zs.spherical_zeros) spherical.push_back(sphere_json(s));
      for (const auto& [s, q] : zs.isolated_zeros) {
        isolated.push_back(Json{{"sphere", sphere_json(s)}, {"point", io::quat_json(q)}, {"text", to_string(q)}});
      }
      out["spherical"] = std::move(spherical);
      out["isolated"] = std::move(isolated);
      out["residual"] = cpoly_json(zs.residual);
      return out;
    });
  }

  int syzygy() {
    const auto inst = io::parse_instance(s_.instance);
    const auto fs = inst.polys();
    const auto pair = build_koszul(fs);
    const auto P = slice_vector(pair.splits);
    const auto W = hat_swap(P);
    bool annihilates = true;
    for (std::size_t k = 0; k < pair.A.cols(); ++k) {
      CPoly a, b;
      for (std::size_t r = 0; r < P.size(); ++r) {
        a += pair.A(r, k) * P[r];
        b += pair.B(r, k) * W[r];
      }
      annihilates = annihilates && a.is_zero() && b.is_zero();
    }
    Json report{{"n", fs.size()},
                {"A", matrix_json(pair.A)},
                {"B", matrix_json(pair.B)},
                {"AB_shape", shape(pair.combined())},
                {"koszul_columns_annihilate", annihilates}};
    Json naturals = Json::array();
    for (std::size_t r = 0; r < fs.size(); ++r) {
      for (std::size_t t = r + 1; t < fs.size(); ++t) {
        const auto syz = natural_syzygy(fs, r, t);
        Json entries = Json::array();
        for (const auto& e : syz.entries) entries.push_back(to_string(e));
        naturals.push_back(Json{{"r", r + 1}, {"t", t + 1}, {"entries", std::move(entries)},
                                {"annihilates", left_combination(fs, syz.entries).is_zero()}});
      }
    }
    report["natural_syzygies"] = std::move(naturals);
    Json three = Json::array();
    for (std::size_t p = 0; p < fs.size(); ++p) {
      for (std::size_t r = p + 1; r < fs.size(); ++r) {
        for (std::size_t t = r + 1; t < fs.size(); ++t) {
          const bool holds = std::holds_alternative<HoldsExactly>(check_three_term(fs, p, r, t));
          three.push_back(Json{{"p", p + 1}, {"r", r + 1}, {"t", t + 1}, {"holds", holds}});
        }
      }
    }
    report["three_term"] = std::move(three);
    emit(report);
    return kOk;
  }

  int rank() {
    const auto inst = io::parse_instance(s_.instance);
    const auto pair = build_koszul(inst.polys());
    const std::size_t n = pair.n;
    const auto AB = pair.combined();
    Json points = Json::array();
    bool all_match = true;
    for (const auto& z : sample_points(s_.sample_points)) {
      const std::size_t ra = rank_at(pair.A, z), rb = rank_at(pair.B, z), rab = rank_at(AB, z);
      const auto dims = kernel_dimension_at(pair, z);
      const bool match = ra == 2 * n - 1 && rb == 2 * n - 1 && rab == 2 * n &&
                         dims.null_ab == 4 * n * n - 4 * n && dims.null_a_plus_null_b == 4 * n * n - 6 * n + 2;
      all_match = all_match && match;
      points.push_back(Json{{"z", to_string(z)}, {"rank_A", ra}, {"rank_B", rb}, {"rank_AB", rab},
                            {"null_AB", dims.null_ab}, {"null_A_plus_null_B", dims.null_a_plus_null_b},
                            {"matches", match}});
    }
    emit(Json{{"n", n},
              {"expected", Json{{"rank_A", 2 * n - 1}, {"rank_B", 2 * n - 1}, {"rank_AB", 2 * n},
                                {"null_AB", 4 * n * n - 4 * n}, {"null_A_plus_null_B", 4 * n * n - 6 * n + 2}}},
              {"points", std::move(points)},
              {"all_match", all_match}});
    return all_match ? kOk : kFail;
  }

  int solve() {
    const auto inst = io::parse_instance(s_.instance);
    const auto fs = inst.polys();
    out_ << "instance: " << s_.instance << " (n=" << fs.size() << ")\n";
    for (const auto& p : inst.polynomials) out_ << "  " << p.name << " = " << to_string(p.poly) << "\n";
    const auto outcome = solve_corona({fs}, s_.corona());
    if (const auto* budget = std::get_if<CertificateBudgetExhausted>(&outcome)) {
      out_ << "certificate not found within budget: " << budget->minors_examined
           << " minors examined, partial gcd " << to_string(budget->partial_gcd) << "\n";
      return kFail;
    }
    if (const auto* obs = std::get_if<CommonZeroObstruction>(&outcome)) {
      out_ << "obstruction: the polynomials have a common zero; minor gcd " << to_string(obs->gcd) << "\n";
      print_diagnosis(out_, inst, diagnose_common_zero({fs}, *obs));
      return kFail;
    }
    const auto& sol = std::get<CoronaSolution>(outcome);
    io::SolutionFile file{inst, {}, sol.certificate};
    for (std::size_t l = 0; l < sol.hs.size(); ++l) file.solution.push_back({label("h", l), sol.hs[l]});
    const std::string path = s_.output.empty() ? default_solution_path() : s_.output;
    std::ofstream(path, std::ios::binary) << io::serialize_solution(file);
    out_ << "certificate: " << sol.certificate.minors.size() << " maximal minors of (A,-B) with Bezout witnesses\n";
    for (const auto& h : file.solution) out_ << "  " << h.name << " = " << to_string(h.poly) << "\n";
    if (s_.trace) print_trace(sol);
    out_ << "solution written to " << path << "\n";
    out_ << "identity verified: sum f_l * h_l = 1\n";
    return kOk;
  }

  int verify() {
    const auto inst = io::parse_instance(s_.instance);
    const auto sol = io::parse_solution(s_.solution);
    const auto fs = inst.polys();
    if (!(sol.instance.polys() == fs)) return fail("solution file was computed for a different instance");
    std::vector<HPoly> hs;
    for (const auto& h : sol.solution) hs.push_back(h.poly);
    if (hs.size() != fs.size()) return fail("expected " + std::to_string(fs.size()) + " solution polynomials");
    if (!verify_solution(fs, hs)) return fail("sum f_l * h_l = " + to_string(left_combination(fs, hs)) + ", not 1");
    if (sol.certificate) {
      const auto problem = check_certificate(build_koszul(fs).combined(), *sol.certificate);
      if (!problem.empty()) return fail("certificate: " + problem);
    }
    out_ << "PASS: sum f_l * h_l = 1" << (sol.certificate ? "; certificate checked" : "") << "\n";
    return kOk;
  }

  int diagnose() {
    const auto inst = io::parse_instance(s_.instance);
    const auto fs = inst.polys();
    const CoronaInstance ci{fs};
    if (fs.size() == 1 && !fs.front().is_zero() && !fs.front().is_constant()) {
      const CommonZeroObstruction obs{monic(to_real_cpoly(symmetrization(fs.front())))};
      out_ << "single nonconstant polynomial: it has zeros\n";
      print_diagnosis(out_, inst, diagnose_common_zero(ci, obs));
      return kFail;
    }
    const auto v = validate(ci, s_.corona());
    if (std::holds_alternative<FullRankCertificate>(v)) {
      out_ << "no common zeros: (A,-B) has full rank everywhere (certificate found)\n";
      return kOk;
    }
    if (const auto* budget = std::get_if<CertificateBudgetExhausted>(&v)) {
      out_ << "undecided: certificate not found within budget (" << budget->minors_examined << " minors)\n";
      return kFail;
    }
    const auto& obs = std::get<CommonZeroObstruction>(v);
    out_ << "obstruction: minor gcd " << to_string(obs.gcd) << "\n";
    print_diagnosis(out_, inst, diagnose_common_zero(ci, obs));
    return kFail;
  }

 private:
  template <class Fn>
  int per_polynomial(Fn&& fn) {
    const auto inst = io::parse_instance(s_.instance);
    Json out = Json::array();
    for (const auto& p : inst.polynomials) {
      Json entry{{"name", p.name}, {"input", to_string(p.poly)}};
      entry.update(fn(p.poly));
      out.push_back(std::move(entry));
    }
    emit(out);
    return kOk;
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  int fail(const std::string& why) {
    out_ << "FAIL: " << why << "\n";
    return kFail;
  }

  std::string default_solution_path() const {
    return std::filesystem::path(s_.instance).replace_extension(".sol").string();
  }

  void print_trace(const CoronaSolution& sol) {
    out_ << "trace:\n";
    for (std::size_t l = 0; l < sol.trace.splits.size(); ++l) {
      out_ << "  split f" << l + 1 << ": F = " << to_string(sol.trace.splits[l].F)
           << ", G = " << to_string(sol.trace.splits[l].G) << "\n";
    }
    auto vec = [&](const char* name, const std::vector<CPoly>& v) {
      if (v.empty()) return;
      out_ << "  " << name << " = (";
      for (std::size_t m = 0; m < v.size(); ++m) out_ << (m ? ", " : "") << to_string(v[m]);
      out_ << ")\n";
    };
    vec("u", sol.trace.particular);
    vec("alpha", sol.trace.alpha);
    vec("beta", sol.trace.beta);
    vec("v", sol.trace.corrected);
    for (std::size_t k = 0; k < sol.certificate.minors.size(); ++k) {
      out_ << "  minor columns {";
      const auto& cols = sol.certificate.minor_columns[k];
      for (std::size_t q = 0; q < cols.size(); ++q) out_ << (q ? "," : "") << cols[q] + 1;
      out_ << "}: " << to_string(sol.certificate.minors[k]) << "\n";
    }
    out_ << "  solution degrees:";
    for (int d : sol.trace.solution_degrees) out_ << " " << d;
    out_ << "\n";
  }

  const Settings& s_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bezout identities for quaternionic polynomials", "qcorona"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--sample-points", s.sample_points, "Rational slice points for rank reports")
      ->check(CLI::PositiveNumber);
  app.add_option("--minor-budget", s.minor_budget, "Maximal minors evaluated before giving up")
      ->check(CLI::PositiveNumber);
  app.add_option("--minor-order", s.minor_order, "Minor search order")
      ->check(CLI::IsMember({"targeted", "lex"}));
  app.add_flag("--trace", s.trace, "Print intermediate data");

  Commands cmd(s, out);
  struct Entry {
    const char* name;
    const char* help;
    int (Commands::*fn)();
  };
  const std::vector<Entry> single{
      {"star", "Star product f1 * f2 * ... * fn", &Commands::star},
      {"conj", "Regular conjugates", &Commands::conj},
      {"sym", "Symmetrizations", &Commands::sym},
      {"eval", "Evaluate at --point x0,x1,x2,x3", &Commands::eval},
      {"split", "Slice splitting F + G j", &Commands::split},
      {"zeros", "Spherical and isolated zeros", &Commands::zeros},
      {"syzygy", "Koszul matrices and natural syzygies", &Commands::syzygy},
      {"rank", "Pointwise ranks and kernel dimensions", &Commands::rank},
      {"solve", "Solve sum f_l * h_l = 1", &Commands::solve},
      {"diagnose", "Locate common zeros", &Commands::diagnose},
  };
  int (Commands::*chosen)() = nullptr;
  for (const auto& e : single) {
    auto* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("instance", s.instance, "Instance file")->required();
    if (std::string(e.name) == "eval") sub->add_option("--point", s.point, "Quaternion x0,x1,x2,x3")->required();
    if (std::string(e.name) == "solve") sub->add_option("-o,--output", s.output, "Solution file path");
    sub->callback([&chosen, fn = e.fn] { chosen = fn; });
  }
  auto* verify = app.add_subcommand("verify", "Re-check a solution file against an instance");
  verify->add_option("instance", s.instance, "Instance file")->required();
  verify->add_option("solution", s.solution, "Solution file")->required();
  verify->callback([&chosen] { chosen = &Commands::verify; });

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return (cmd.*chosen)();
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qcorona::cli
