#include "k3pol/cli.hpp"

#include "k3pol/certificate.hpp"
#include "k3pol/error.hpp"
#include "k3pol/json_io.hpp"
#include "k3pol/lattice.hpp"
#include "k3pol/mukai.hpp"
#include "k3pol/periods.hpp"
#include "k3pol/random.hpp"
#include "k3pol/zlinalg.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace k3pol::cli {

namespace {

using nlohmann::json;

// A math-level rejection that still produced a JSON document worth printing.
struct Failure {
  json document;
  std::string message;
};

json load_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(Errc::invalid_argument, "empty JSON argument");
  const char c = arg[first];
  if (c == '[' || c == '{' || c == '"' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
    return parse_json(arg);
  std::ifstream in(arg);
  if (!in) throw Error(Errc::invalid_argument, "cannot read \"" + arg + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
    case Errc::lattice_mismatch:
    case Errc::radical_vector:
    case Errc::odd_dimension:
    case Errc::not_alternating:
    case Errc::singular:
    case Errc::dependent_input:
      return exit_usage;
    default:
      return exit_verification_failed;
  }
}

StandardLattice lattice_name(const std::string& name) {
  if (name == "U") return StandardLattice::U;
  if (name == "e8neg") return StandardLattice::E8neg;
  if (name == "k3") return StandardLattice::K3;
  if (name == "k3n") return StandardLattice::K3n;
  if (name == "mukai") return StandardLattice::Mukai;
  if (name == "rank1") return StandardLattice::rank_one;
  throw Error(Errc::invalid_argument, "unknown lattice name \"" + name + "\"");
}

json run_selftest(std::uint64_t seed, std::size_t trials) {
  random::Engine rng(seed);
  struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
  };
  Tally smith, hermite, poltype, positive_pairing;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto rows = static_cast<std::size_t>(random::uniform(rng, 1, 8));
    const auto cols = static_cast<std::size_t>(random::uniform(rng, 1, 8));
    const auto m = random::matrix(rng, rows, cols, 100);
    const auto f = smith_normal_form(m);
    bool ok = f.U * m * f.V == f.S && is_unimodular(f.U) && is_unimodular(f.V);
    for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
      const auto& a = f.S(i, i);
      const auto& b = f.S(i + 1, i + 1);
      if (a == 0 ? b != 0 : b % a != 0) ok = false;
    }
    ++smith.cases;
    smith.failures += ok ? 0 : 1;

    const auto h = hermite_normal_form(m);
    ++hermite.cases;
    hermite.failures += (h.U * m == h.H && hermite_normal_form(h.H).H == h.H) ? 0 : 1;

    const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 5));
    const auto chain = random::divisor_chain(rng, n, 50);
    const auto w = random::unimodular(rng, 2 * n, 30);
    const auto a = w.matrix.transpose() * standard_symplectic(chain) * w.matrix;
    ++poltype.cases;
    poltype.failures += polarization_type(a).chain() == chain ? 0 : 1;

    const auto k = static_cast<std::size_t>(random::uniform(rng, 1, 20));
    const auto lattice = random::hyperbolic_lattice(rng, k);
    const auto x = random::positive_vector(rng, lattice);
    const auto lambda = random::isotropic_vector(rng, lattice);
    ++positive_pairing.cases;
    try {
      isotropic_positive_pairing_check(lattice, x, lambda);
    } catch (const Error&) {
      ++positive_pairing.failures;
    }
  }
  auto entry = [](const Tally& t) { return json{{"cases", t.cases}, {"failures", t.failures}}; };
  const bool pass = smith.failures + hermite.failures + poltype.failures + positive_pairing.failures == 0;
  return {{"seed", std::to_string(seed)},
          {"trials", trials},
          {"checks",
           {{"smith_normal_form", entry(smith)},
            {"hermite_normal_form", entry(hermite)},
            {"polarization_type", entry(poltype)},
            {"isotropic_positive_pairing", entry(positive_pairing)}}},
          {"status", pass ? "pass" : "fail"}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice toolkit for polarization types of K3^[n]-type Lagrangian fibrations",
               "k3pol"};
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("--output", output_path, "Write JSON here instead of standard output");

  // The selected subcommand stores its action here.
  std::function<json()> action;
  std::string name, matrix_arg, lattice_arg, vector_arg, lambda_arg, x_arg, y_arg;
  std::int64_t n = 0, d = 0, b = 0;
  std::optional<std::int64_t> n_opt, d_opt, k_opt, b_opt;
  std::uint64_t seed = 0;
  std::size_t trials = 50;

  auto* lattice_cmd = app.add_subcommand("lattice", "Emit a standard lattice");
  lattice_cmd->add_option("--name", name, "U | e8neg | k3 | k3n | mukai | rank1")->required();
  lattice_cmd->add_option("--n", n_opt, "Level n for k3n / mukai");
  lattice_cmd->add_option("--k", k_opt, "Self-pairing for rank1");
  lattice_cmd->callback([&] {
    action = [&] {
      const auto kind = lattice_name(name);
      std::optional<Integer> param;
      if (kind == StandardLattice::rank_one && k_opt) param = Integer(*k_opt);
      if (kind != StandardLattice::rank_one && n_opt) param = Integer(*n_opt);
      return to_json(standard_lattice(kind, param));
    };
  });

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form U M V = S");
  snf_cmd->add_option("--matrix", matrix_arg, "Matrix JSON (file or inline)")->required();
  snf_cmd->callback([&] {
    action = [&] {
      const auto m = matrix_from_json(load_json_arg(matrix_arg));
      const auto f = smith_normal_form(m);
      IntVector diag;
      for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) diag.push_back(f.S(i, i));
      return json{{"S", to_json(f.S)}, {"U", to_json(f.U)}, {"V", to_json(f.V)},
                  {"diagonal", to_json(diag)}};
    };
  });

  auto* hnf_cmd = app.add_subcommand("hnf", "Row Hermite normal form U M = H");
  hnf_cmd->add_option("--matrix", matrix_arg, "Matrix JSON (file or inline)")->required();
  hnf_cmd->callback([&] {
    action = [&] {
      const auto f = hermite_normal_form(matrix_from_json(load_json_arg(matrix_arg)));
      return json{{"H", to_json(f.H)}, {"U", to_json(f.U)}, {"rank", f.rank}};
    };
  });

  auto* pol_cmd = app.add_subcommand("poltype", "Polarization type of an alternating form");
  pol_cmd->add_option("--matrix", matrix_arg, "Matrix JSON (file or inline)")->required();
  pol_cmd->callback([&] {
    action = [&] {
      const auto a = matrix_from_json(load_json_arg(matrix_arg));
      const auto type = polarization_type(a);
      const auto form = symplectic_normal_form(a);
      return json{{"type", to_json(type)}, {"transform", to_json(form.transform)}};
    };
  });

  auto* div_cmd = app.add_subcommand("div", "Divisibility of a lattice vector");
  div_cmd->add_option("--lattice", lattice_arg, "Lattice JSON (file or inline)")->required();
  div_cmd->add_option("--vector", vector_arg, "Vector JSON")->required();
  div_cmd->callback([&] {
    action = [&] {
      const Lattice l = lattice_from_json(load_json_arg(lattice_arg));
      const LatticeVector v(l, int_vector_from_json(load_json_arg(vector_arg)));
      return json{{"divisibility", to_json(divisibility(v))}};
    };
  });

  auto* inv_cmd = app.add_subcommand("invariant", "Monodromy invariant h(lambda)");
  inv_cmd->add_option("--n", n, "Level n >= 2")->required();
  inv_cmd->add_option("--lambda", lambda_arg, "lambda as 23 coordinates")->required();
  inv_cmd->callback([&] {
    action = [&] {
      const LatticeVector lambda(k3n_lattice(n), int_vector_from_json(load_json_arg(lambda_arg)));
      return to_json(h_lambda(n, lambda));
    };
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "Canonical classes of I_{n,d}");
  enum_cmd->add_option("--n", n, "Level n >= 2")->required();
  enum_cmd->add_option("--d", d_opt, "Divisibility (default: every admissible d)");
  enum_cmd->callback([&] {
    action = [&] {
      json classes = json::array();
      const auto ds = d_opt ? std::vector<std::int64_t>{*d_opt} : admissible_divisibilities(n);
      for (auto dd : ds)
        for (const auto& c : enumerate_invariant_set(n, dd)) classes.push_back(to_json(c));
      return json{{"n", std::to_string(n)}, {"classes", classes}};
    };
  });

  auto* bm_cmd = app.add_subcommand("bm", "Beauville-Mukai witness with verification report");
  bm_cmd->add_option("--n", n, "Level n >= 2")->required();
  bm_cmd->add_option("--d", d, "Divisibility d, d^2 | n-1")->required();
  bm_cmd->add_option("--b", b, "b coprime to d")->required();
  bm_cmd->callback([&] { action = [&] { return to_json(beauville_mukai_vector(n, d, b)); }; });

  auto* cert_cmd = app.add_subcommand("certificate", "Principality certificate for lambda");
  cert_cmd->add_option("--n", n, "Level n >= 2")->required();
  cert_cmd->add_option("--lambda", lambda_arg, "lambda as 23 coordinates")->required();
  cert_cmd->add_option("--b", b_opt, "Claimed b (default: computed)");
  cert_cmd->callback([&] {
    action = [&] {
      const LatticeVector lambda(k3n_lattice(n), int_vector_from_json(load_json_arg(lambda_arg)));
      try {
        return to_json(principality_certificate(n, lambda, b_opt));
      } catch (const CertificateFailure& f) {
        throw Failure{to_json(f.partial()), f.what()};
      }
    };
  });

  auto* period_cmd = app.add_subcommand("period", "Period-domain membership and the (1,1) lattice");
  period_cmd->add_option("--lattice", lattice_arg, "Lattice JSON (file or inline)")->required();
  period_cmd->add_option("--x", x_arg, "Real part, rationals as \"p/q\"")->required();
  period_cmd->add_option("--y", y_arg, "Imaginary part")->required();
  period_cmd->add_option("--lambda", lambda_arg, "Optional integral class");
  period_cmd->callback([&] {
    action = [&] {
      const Lattice l = lattice_from_json(load_json_arg(lattice_arg));
      const PeriodPoint p(l, rational_vector_from_json(load_json_arg(x_arg)),
                          rational_vector_from_json(load_json_arg(y_arg)));
      json result{{"is_period_point", is_period_point(p)}};
      if (!is_period_point(p)) return result;
      json basis = json::array();
      for (const auto& v : one_one_lattice(p)) basis.push_back(to_json(v));
      result["one_one_rank"] = basis.size();
      result["one_one_basis"] = basis;
      if (!lambda_arg.empty()) {
        const LatticeVector lambda(l, int_vector_from_json(load_json_arg(lambda_arg)));
        result["in_period_perp"] = in_period_perp(p, lambda);
      }
      return result;
    };
  });

  auto* self_cmd = app.add_subcommand("selftest", "Randomized property checks");
  self_cmd->add_option("--seed", seed, "RNG seed")->required();
  self_cmd->add_option("--trials", trials, "Trials per property");
  self_cmd->callback([&] {
    action = [&] {
      json report = run_selftest(seed, trials);
      if (report["status"] != "pass") throw Failure{report, "selftest found property violations"};
      return report;
    };
  });

  auto emit = [&](const json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (output_path.empty()) {
      out << text;
      return true;
    }
    std::ofstream file(output_path);
    if (!file) return false;
    file << text;
    return static_cast<bool>(file);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    const json doc = action();
    if (!emit(doc)) {
      err << "error: cannot write " << output_path << "\n";
      return exit_usage;
    }
    return exit_ok;
  } catch (const Failure& f) {
    emit(f.document);
    err << "verification failed: " << f.message << "\n";
    return exit_verification_failed;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: bad JSON input: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace k3pol::cli
