#include "splitq/cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "splitq/splitq.hpp"

namespace splitq::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string backend = "auto";
  double eps = 1e-9;
  std::uint64_t seed = 0;
};

struct Reply {
  json result = json::object();
  std::string backend;
  bool verified = true;
  // Set to 1 for a false verdict.
  int code = 0;
};

template <Scalar T>
std::string str(const SplitQuaternion<T>& q) {
  return to_string(q);
}

template <Scalar T>
json family_json(const SolutionFamily<T>& fam) {
  json terms = json::array();
  for (const auto& t : fam.terms()) terms.push_back({{"left", str(t.left)}, {"right", str(t.right)}});
  json basis = json::array();
  for (const auto& v : fam.basis()) basis.push_back(str(v));
  return {{"constant", str(fam.constant())}, {"terms", terms}, {"dimension", fam.dimension()}, {"basis", basis}};
}

// Substitution check of a family against `holds` at the constant and at every
// basis direction added to it.
template <Scalar T>
bool family_checks(const SolutionFamily<T>& fam, const std::function<bool(const SplitQuaternion<T>&)>& holds) {
  if (!holds(fam.constant())) return false;
  for (const auto& y : fixed_probes<T>())
    if (!holds(fam.at(y))) return false;
  return true;
}

template <Scalar T>
json matrix_json(const Mat4<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <Scalar T>
Reply solve_reply(const SolveOutcome<T>& outcome, const Mat4<T>& system, const SplitQuaternion<T>& d,
                  const std::function<bool(const SplitQuaternion<T>&)>& holds, Tolerance tol) {
  Reply r;
  if (const auto* s = std::get_if<Solvable<T>>(&outcome)) {
    r.result["solvable"] = true;
    r.result["family"] = family_json(s->family);
    r.verified = family_checks(s->family, holds);
  } else {
    const auto& u = std::get<Unsolvable<T>>(outcome);
    r.result["solvable"] = false;
    r.result["certificate"] = str(u.certificate);
    const auto v = vec(d);
    r.verified = !is_zero(u.certificate, tol) &&
                 !linalg::is_consistent(system.dense(), std::vector<T>(v.begin(), v.end()), tol);
  }
  return r;
}

std::size_t arity(const std::string& op) {
  if (op == "solve-axb") return 3;
  if (op == "solve-axd" || op == "solve-xad" || op == "similar" || op == "sim-solve" || op == "consimilar" ||
      op == "consim-solve")
    return 2;
  return 1;
}

template <Scalar T>
Reply evaluate(const std::string& op, const std::vector<SplitQuaternion<T>>& q, unsigned n, const std::string& kind,
               const Options& opt) {
  const Tolerance tol{opt.eps};
  Reply r;

  if (op == "classify") {
    const auto& a = q[0];
    r.result = {{"class", std::string(to_string(classify(a, tol)))},
                {"I", to_string(i_norm(a))},
                {"K", to_string(k_form(a))},
                {"real", is_real(a, tol)},
                {"nilpotent", is_nilpotent(a, tol)},
                {"idempotent", is_idempotent(a, tol)}};
    r.verified = classify(a, tol) == classify(conjugate(a), tol);
  } else if (op == "pinv") {
    const auto& a = q[0];
    const auto p = mp_inverse(a, tol);
    r.result = {{"value", str(p)}};
    if constexpr (!ScalarTraits<T>::exact) r.result["ill_conditioned"] = is_ill_conditioned(a, tol);
    r.verified = approx_equal(SplitQuaternion<T>(a * p * a), a, tol) && approx_equal(SplitQuaternion<T>(p * a * p), p, tol);
  } else if (op == "power") {
    const auto v = power(q[0], n, tol);
    SplitQuaternion<T> naive = SplitQuaternion<T>::one();
    for (unsigned k = 0; k < n; ++k) naive = naive * q[0];
    r.result = {{"value", str(v)}};
    r.verified = approx_equal(v, naive, tol);
  } else if (op == "roots") {
    const ApproxQuat a = convert<T, double>(q[0]);
    const auto roots = nth_roots(a, n, tol);
    json list = json::array();
    r.verified = true;
    for (const auto& w : roots) {
      list.push_back(str(w));
      ApproxQuat p = ApproxQuat::one();
      for (unsigned k = 0; k < n; ++k) p = p * w;
      if (euclidean_norm(ApproxQuat(p - a)) > 1e-8 * (1 + euclidean_norm(a))) r.verified = false;
    }
    const LightlikePolar polar = to_polar(a, tol);
    r.result = {{"count", roots.size()},
                {"roots", list},
                {"polar", {{"r", polar.r}, {"alpha", polar.alpha}, {"beta", polar.beta}}}};
  } else if (op == "solve-axb") {
    const auto &a = q[0], &b = q[1], &d = q[2];
    r = solve_reply<T>(solve_axb(a, b, d, tol), Mat4<T>(left_matrix(a) * right_matrix(b)), d,
                       [&](const SplitQuaternion<T>& x) { return approx_equal(SplitQuaternion<T>(a * x * b), d, tol); },
                       tol);
  } else if (op == "solve-ax0") {
    const auto& a = q[0];
    const auto fam = solve_ax0(a, tol);
    r.result = {{"solvable", true}, {"family", family_json(fam)}};
    r.verified = family_checks<T>(fam, [&](const SplitQuaternion<T>& x) { return is_zero(SplitQuaternion<T>(a * x), tol); });
  } else if (op == "solve-axd") {
    const auto &a = q[0], &d = q[1];
    r = solve_reply<T>(solve_axd(a, d, tol), left_matrix(a), d,
                       [&](const SplitQuaternion<T>& x) { return approx_equal(SplitQuaternion<T>(a * x), d, tol); }, tol);
  } else if (op == "solve-xad") {
    const auto &a = q[0], &d = q[1];
    r = solve_reply<T>(solve_xad(a, d, tol), right_matrix(a), d,
                       [&](const SplitQuaternion<T>& x) { return approx_equal(SplitQuaternion<T>(x * a), d, tol); }, tol);
  } else if (op == "similar") {
    const auto &a = q[0], &b = q[1];
    const auto v = is_similar(a, b, opt.seed, tol);
    r.result["similar"] = v.similar;
    if (v.witness) {
      const auto& x = *v.witness;
      r.result["witness"] = str(x);
      r.verified = !is_lightlike(x, tol) && approx_equal(SplitQuaternion<T>(x * a), SplitQuaternion<T>(b * x), tol);
    } else {
      r.verified = !scalar_equal(a[0], b[0], tol) || !scalar_equal(k_form(a), k_form(b), tol) || is_real(a, tol) ||
                   is_real(b, tol);
    }
    r.code = v.similar ? 0 : 1;
  } else if (op == "sim-solve") {
    const auto &a = q[0], &b = q[1];
    const auto fam = solve_xa_bx(a, b, tol);
    r.result = {{"rank_case", std::string(to_string(t_rank_case(a, b, tol)))}, {"family", family_json(fam)}};
    r.verified = fam.dimension() == 4 - rank(t_matrix(a, b), tol) &&
                 family_checks<T>(fam, [&](const SplitQuaternion<T>& x) {
                   return approx_equal(SplitQuaternion<T>(x * a), SplitQuaternion<T>(b * x), tol);
                 });
  } else if (op == "consimilar") {
    const auto &a = q[0], &b = q[1];
    const auto v = is_consimilar(a, b, tol);
    r.result["consimilar"] = v.consimilar;
    if (v.witness) {
      const auto& x = *v.witness;
      r.result["witness"] = str(x);
      r.verified = !is_lightlike(x, tol) &&
                   approx_equal(SplitQuaternion<T>(x * a), SplitQuaternion<T>(b * conjugate(x)), tol);
    }
    r.code = v.consimilar ? 0 : 1;
  } else if (op == "consim-solve") {
    const auto &a = q[0], &b = q[1];
    const auto fam = solve_xa_bxbar(a, b, tol);
    r.result = {{"rank_case", std::string(to_string(s_rank_case(a, b, tol)))}, {"family", family_json(fam)}};
    r.verified = fam.dimension() == 4 - rank(s_matrix(a, b), tol) &&
                 family_checks<T>(fam, [&](const SplitQuaternion<T>& x) {
                   return approx_equal(SplitQuaternion<T>(x * a), SplitQuaternion<T>(b * conjugate(x)), tol);
                 });
  } else if (op == "matrix") {
    const SplitQuaternion<T> probe(T(1), T(-2), T(3), T(5));
    Mat4<T> m;
    SplitQuaternion<T> image;
    if (kind == "L") {
      m = left_matrix(q[0]);
      image = q[0] * probe;
    } else if (kind == "R") {
      m = right_matrix(q[0]);
      image = probe * q[0];
    } else if (kind == "T") {
      m = t_matrix(q[0], q[1]);
      image = probe * q[0] - q[1] * probe;
    } else {
      m = s_matrix(q[0], q[1]);
      image = probe * q[0] - q[1] * conjugate(probe);
    }
    r.result = {{"kind", kind}, {"matrix", matrix_json(m)}, {"rank", rank(m, tol)}, {"det", to_string(determinant(m, tol))}};
    if (kind == "T") r.result["rank_case"] = std::string(to_string(t_rank_case(q[0], q[1], tol)));
    if (kind == "S") r.result["rank_case"] = std::string(to_string(s_rank_case(q[0], q[1], tol)));
    r.verified = approx_equal(from_vec(m * vec(probe)), image, tol);
  }
  r.backend = std::string(ScalarTraits<T>::name);
  if (op == "roots") r.backend = "approx";
  return r;
}

Reply canonical_exact(const ExactQuat& a, const Options& opt) {
  const Tolerance tol{opt.eps};
  const CanonicalOutcome out = canonical_form_exact_or_approx(a, opt.seed, tol);
  Reply r;
  std::visit(
      [&](const auto& cf) {
        using T = std::decay_t<decltype(cf.target[0])>;
        const SplitQuaternion<T> av = convert<Rational, T>(a);
        r.result = {{"target", str(cf.target)}, {"conjugator", str(cf.conjugator)}, {"escalated", out.escalated}};
        r.backend = std::string(ScalarTraits<T>::name);
        r.verified = !is_lightlike(cf.conjugator, tol) &&
                     euclidean_norm(SplitQuaternion<double>(convert<T, double>(SplitQuaternion<T>(cf.conjugator * av - cf.target * cf.conjugator)))) <= 1e-9;
      },
      out.form);
  return r;
}

Reply canonical_approx(const ApproxQuat& a, const Options& opt) {
  const Tolerance tol{opt.eps};
  const CanonicalForm<double> cf = canonical_form(a, opt.seed, tol);
  Reply r;
  r.result = {{"target", str(cf.target)}, {"conjugator", str(cf.conjugator)}, {"escalated", false}};
  r.backend = "approx";
  r.verified = !is_lightlike(cf.conjugator, tol) &&
               euclidean_norm(ApproxQuat(cf.conjugator * a - cf.target * cf.conjugator)) <= 1e-9 * (1 + euclidean_norm(a));
  return r;
}

void print_text(const json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      print_text(value, out, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        std::string line;
        for (const auto& [k, v] : item.items()) line += (line.empty() ? "" : ", ") + k + "=" + v.get<std::string>();
        out << indent << "  " << line << "\n";
      }
    } else if (value.is_array() && !value.empty() && value.front().is_array()) {
      out << indent << key << ":\n";
      for (const auto& row : value) {
        out << indent << " ";
        for (const auto& cell : row) out << " " << cell.get<std::string>();
        out << "\n";
      }
    } else if (value.is_array()) {
      std::string line;
      for (const auto& item : value) line += (line.empty() ? "" : ", ") + item.get<std::string>();
      out << indent << key << ": " << (line.empty() ? "(none)" : line) << "\n";
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

// Arguments that start with '-' but are quaternion literals ("-k", "-1/2+j")
// would be read as flags; a leading blank keeps them positional.
std::vector<std::string> protect_literals(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    if (a.size() > 1 && a[0] == '-' && a[1] != '-') {
      try {
        parse_quaternion(a);
        out.push_back(" " + a);
        continue;
      } catch (const ParseError&) {
      }
    }
    out.push_back(a);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options opt;
  if (const char* env = std::getenv("SPLITQ_EPS")) {
    try {
      opt.eps = std::stod(env);
    } catch (const std::exception&) {
      err << "error: SPLITQ_EPS is not a number\n";
      return 2;
    }
  }

  CLI::App app{"Split quaternion algebra toolkit", "splitq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Emit JSON");
  app.add_option("--backend", opt.backend, "Scalar backend")->check(CLI::IsMember({"auto", "exact", "approx"}));
  app.add_option("--eps", opt.eps, "Zero tolerance of the approx backend")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed of the witness search");

  std::vector<std::string> inputs;
  unsigned n = 0;
  std::string kind;
  const std::vector<std::pair<std::string, std::string>> ops = {
      {"classify", "Causal class, I and K of Q"},
      {"pinv", "Moore-Penrose inverse of Q"},
      {"roots", "n-th roots of a lightlike Q"},
      {"power", "Q to the n-th power"},
      {"solve-axb", "Solve a x b = d"},
      {"solve-ax0", "Solve a x = 0"},
      {"solve-axd", "Solve a x = d"},
      {"solve-xad", "Solve x a = d"},
      {"similar", "Decide similarity and give a witness"},
      {"sim-solve", "All solutions of x a = b x"},
      {"canonical", "Canonical representative and conjugator"},
      {"consimilar", "Decide consimilarity and give a witness"},
      {"consim-solve", "All solutions of x a = b conj(x)"},
  };
  for (const auto& [name, help] : ops) {
    CLI::App* sub = app.add_subcommand(name, help);
    const std::size_t k = arity(name);
    sub->add_option("quaternions", inputs, "Quaternion literals")->required()->expected(static_cast<int>(k));
    if (name == "roots" || name == "power") sub->add_option("-n", n, "Exponent")->required()->check(CLI::PositiveNumber);
  }
  CLI::App* matrix = app.add_subcommand("matrix", "L(q), R(q), T(a, b) or S(a, b)");
  matrix->add_option("kind", kind, "L, R, T or S")->required()->check(CLI::IsMember({"L", "R", "T", "S"}));
  matrix->add_option("quaternions", inputs, "Quaternion literals")->required();

  const std::vector<std::string> args = protect_literals(raw_args);
  std::vector<const char*> argv = {"splitq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string op = app.get_subcommands().front()->get_name();
  for (auto& s : inputs) s = trim(s);
  if (op == "matrix") {
    const std::size_t need = (kind == "L" || kind == "R") ? 1 : 2;
    if (inputs.size() != need) {
      err << "error: matrix " << kind << " takes " << need << " quaternion(s)\n";
      return 2;
    }
  }
  if (op == "roots" && n < 2) {
    err << "error: roots needs -n >= 2\n";
    return 2;
  }

  try {
    std::vector<ExactQuat> exact;
    bool decimal = false;
    for (const auto& s : inputs) {
      try {
        const ParsedQuaternion p = parse_quaternion(s);
        exact.push_back(p.value);
        decimal = decimal || p.has_decimal;
      } catch (const ParseError& e) {
        err << "error: cannot parse '" << s << "': " << e.what() << "\n";
        return 2;
      }
    }
    const bool use_exact = opt.backend == "exact" || (opt.backend == "auto" && !decimal);

    Reply reply;
    if (op == "canonical") {
      reply = use_exact ? canonical_exact(exact[0], opt) : canonical_approx(convert<Rational, double>(exact[0]), opt);
    } else if (use_exact) {
      reply = evaluate<Rational>(op, exact, n, kind, opt);
    } else {
      std::vector<ApproxQuat> approx;
      for (const auto& q : exact) approx.push_back(convert<Rational, double>(q));
      reply = evaluate<double>(op, approx, n, kind, opt);
    }

    if (opt.json) {
      json doc = {{"op", op}, {"inputs", inputs}, {"result", reply.result}, {"backend", reply.backend},
                  {"verified", reply.verified}};
      out << doc.dump(2) << "\n";
    } else {
      print_text(reply.result, out, "");
      out << "backend: " << reply.backend << "\n";
      out << "verified: " << (reply.verified ? "true" : "false") << "\n";
    }
    return reply.code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace splitq::cli
