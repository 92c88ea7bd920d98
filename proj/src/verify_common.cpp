#include "verify_common.hpp"

#include <stdexcept>

namespace ptmc {

std::string_view to_string(FailureKind k) {
  switch (k) {
  case FailureKind::none: return "none";
  case FailureKind::overlap: return "overlap";
  case FailureKind::gap: return "gap";
  case FailureKind::nonunique_nearest: return "nonunique-nearest";
  case FailureKind::bad_radius: return "bad-radius";
  case FailureKind::degenerate_ambient: return "degenerate-ambient";
  }
  return "unknown";
}

std::string_view to_string(NearestRule r) { return r == NearestRule::global ? "global" : "owner"; }

namespace detail {

VerifyReport failure_report(FailureKind kind, std::vector<Point> witness) {
  VerifyReport r;
  r.pass = false;
  r.failure = kind;
  const std::string at = witness.empty() ? std::string("?") : to_string(witness.front());
  switch (kind) {
  case FailureKind::overlap:
    r.detail = "vertex " + at + " lies in " + std::to_string(witness.size() - 1) + " balls";
    break;
  case FailureKind::gap: r.detail = "vertex " + at + " lies in no ball"; break;
  case FailureKind::nonunique_nearest:
    r.detail = "vertex " + at + " has " + std::to_string(witness.size() - 1) + " nearest code vertices";
    break;
  case FailureKind::bad_radius: r.detail = "component at " + at + " has a radius outside [1, n]"; break;
  case FailureKind::degenerate_ambient: r.detail = "torus modulus below 3"; break;
  case FailureKind::none: break;
  }
  r.witness = std::move(witness);
  return r;
}

PreparedCode prepare_code(const CodeSet &S, const KappaAssignment &kappa) {
  const Ambient &a = S.ambient;
  if (!a.is_torus())
    throw std::invalid_argument("PTMC verification runs on tori only; windows have boundary effects");
  PreparedCode p;
  if (a.is_degenerate()) {
    p.early = failure_report(FailureKind::degenerate_ambient, {Point(std::vector<Coord>(a.dim(), 0))});
    return p;
  }
  p.comps = components_of(S);
  const int n = static_cast<int>(a.dim());
  for (const Component &c : p.comps) {
    const auto r = kappa.radius_for(c.class_key);
    if (!r) throw std::out_of_range("missing kappa entry for class " + class_key_text(c.class_key));
    if ((*r < 1 || *r > n) && !p.early)
      p.early = failure_report(FailureKind::bad_radius, {c.min_vertex()});
    p.radius.push_back(*r);
  }
  return p;
}

} // namespace detail

VerifyReport verify_t_ptmc(const CodeSet &S, int t, NearestRule rule) {
  return verify_kappa_ptmc(S, KappaAssignment::uniform(t), rule);
}

VerifyReport serial::verify_t_ptmc(const CodeSet &S, int t, NearestRule rule) {
  return serial::verify_kappa_ptmc(S, KappaAssignment::uniform(t), rule);
}

} // namespace ptmc
