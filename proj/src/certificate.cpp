#include "k3pol/certificate.hpp"

#include "k3pol/json_io.hpp"
#include "k3pol/mukai.hpp"
#include "k3pol/periods.hpp"

#include <numeric>
#include <utility>

namespace k3pol {

std::string_view to_string(StepStatus status) {
  switch (status) {
    case StepStatus::pass: return "pass";
    case StepStatus::fail: return "fail";
    case StepStatus::paper_supplied: return "paper-supplied";
  }
  return "unknown";
}

namespace {

using nlohmann::json;

class Builder {
 public:
  Builder(std::int64_t n, const LatticeVector& lambda) {
    cert_.n = n;
    cert_.lambda = lambda.coords();
  }

  // Runs body; any Error it throws, or a false result, fails the step.
  template <typename Body>
  void step(std::string id, std::string claim, std::string tag, Body&& body) {
    CertificateStep s{std::move(id), std::move(claim), std::move(tag), StepStatus::fail, json::object()};
    std::string reason;
    bool ok = false;
    try {
      ok = body(s.witness, reason);
    } catch (const Error& e) {
      reason = e.what();
    }
    s.status = ok ? StepStatus::pass : StepStatus::fail;
    if (!ok) s.witness["error"] = reason;
    cert_.steps.push_back(std::move(s));
    if (!ok)
      throw CertificateFailure(cert_, "certificate step '" + cert_.steps.back().step +
                                          "' failed: " + reason);
  }

  void cite(std::string id, std::string claim, std::string tag) {
    cert_.steps.push_back({std::move(id), std::move(claim), std::move(tag),
                           StepStatus::paper_supplied, json::object()});
  }

  Certificate finish(PolarizationType conclusion) {
    cert_.conclusion = std::move(conclusion);
    return std::move(cert_);
  }

 private:
  Certificate cert_;
};

json positivity_json(const PositivityWitness& w) {
  json plane = json::array();
  for (const auto& v : w.positive_plane) plane.push_back(to_json(v));
  return {{"positive_plane", plane},
          {"restricted_signature", to_json(signature(w.restricted))},
          {"x", to_json(w.x)},
          {"(x,lambda)", to_json(w.pairing)},
          {"sign", w.sign}};
}

}  // namespace

Certificate principality_certificate(std::int64_t n, const LatticeVector& lambda,
                                     std::optional<std::int64_t> claimed_b) {
  if (n < 2) throw Error(Errc::invalid_argument, "n must be at least 2");
  Builder cert(n, lambda);
  Integer d = 0;
  std::optional<MonodromyInvariant> inv;
  std::int64_t b = 0;
  std::optional<BeauvilleMukaiWitness> bm;

  cert.step("isotropy", "lambda is a primitive isotropic class of the level-n lattice",
            "fibration class is isotropic", [&](json& w, std::string& why) {
              if (!(lambda.lattice() == k3n_lattice(n))) {
                why = "lambda is not in the level-n lattice";
                return false;
              }
              w["(lambda,lambda)"] = to_json(pairing(lambda, lambda));
              w["content"] = to_json(content(lambda.coords()));
              if (!is_primitive(lambda)) why = "lambda is not primitive";
              else if (!is_isotropic(lambda)) why = "lambda is not isotropic";
              return is_primitive(lambda) && is_isotropic(lambda);
            });

  cert.step("divisibility", "d = Div(lambda) and d^2 divides n-1",
            "divisibility square divides n-1", [&](json& w, std::string& why) {
              d = divisibility(lambda);
              w["d"] = to_json(d);
              w["n-1"] = std::to_string(n - 1);
              const bool ok = (n - 1) % (d * d) == 0;
              if (!ok) why = "d^2 does not divide n-1";
              else w["(n-1)/d^2"] = to_json(Integer((n - 1) / (d * d)));
              return ok;
            });

  cert.step("monodromy_invariant",
            "H(lambda) is isometric to H_{n,d}, (iota(lambda) - b v)/d is integral and gcd(d,b) = 1",
            "monodromy invariant h(lambda)", [&](json& w, std::string& why) {
              inv = h_lambda(n, lambda);
              b = claimed_b.value_or(inv->b);
              w["computed_b"] = std::to_string(inv->b);
              w["b"] = std::to_string(b);
              w["gram_H"] = to_json(inv->gram);
              w["invariant"] = to_json(inv->invariant);
              const auto emb = canonical_embedding(n);
              const LatticeVector rest = emb.apply(lambda) - Integer(b) * emb.complement_generator;
              bool integral = true;
              for (const auto& c : rest.coords())
                if (c % d != 0) integral = false;
              w["integral"] = integral;
              if (!integral) {
                why = "(iota(lambda) - b v)/d is not integral for b = " + std::to_string(b);
                return false;
              }
              if (std::gcd(static_cast<std::int64_t>(d), b) != 1) {
                why = "gcd(d, b) != 1";
                return false;
              }
              return true;
            });

  cert.step("beauville_mukai", "a Beauville-Mukai vector v = (0, d beta, s) realizes (d, b)",
            "Beauville-Mukai witness", [&](json& w, std::string&) {
              bm = beauville_mukai_vector(n, static_cast<std::int64_t>(d), b);
              w = to_json(*bm);
              return true;
            });

  cert.step("invariant_equality", "h(alpha) = h(lambda) as canonical classes",
            "equal monodromy invariants", [&](json& w, std::string& why) {
              w["h(lambda)"] = to_json(inv->invariant);
              w["h(alpha)"] = to_json(bm->alpha_invariant);
              const bool ok = inv->invariant == bm->alpha_invariant;
              if (!ok) why = "h(alpha) differs from h(lambda)";
              return ok;
            });

  cert.step("positivity",
            "(x, lambda) > 0 and (x', alpha) > 0 for positive x, x' in the cones bounded by lambda and alpha",
            "isotropic class pairs positively with the positive cone",
            [&](json& w, std::string&) {
              w["lambda"] = positivity_json(positivity_witness(lambda));
              // alpha inside v^perp, written in the Hermite basis of v^perp.
              const auto& perp = bm->v_perp;
              IntegerMatrix g(perp.size(), perp.size());
              for (std::size_t i = 0; i < perp.size(); ++i)
                for (std::size_t j = 0; j < perp.size(); ++j) g(i, j) = pairing(perp[i], perp[j]);
              std::vector<IntVector> rows;
              for (const auto& p : perp) rows.push_back(p.coords());
              const auto coords = coordinates_in_basis(rows, to_mukai_lattice(bm->alpha).coords());
              if (!coords) throw Error(Errc::verification_failed, "alpha is not in v^perp");
              const Lattice h2(std::move(g));
              w["alpha"] = positivity_json(positivity_witness(LatticeVector(h2, *coords)));
              return true;
            });

  cert.cite("deformation_invariance",
            "the polarization type is constant on connected families of Lagrangian fibrations",
            "polarization type is a deformation invariant");
  cert.cite("beauville_mukai_principal",
            "the generic fiber of a Beauville-Mukai system is a Jacobian of Picard number one, so d(pi) = (1,...,1)",
            "Beauville-Mukai systems are principally polarized");

  return cert.finish(PolarizationType::principal(static_cast<std::size_t>(n)));
}

}  // namespace k3pol
