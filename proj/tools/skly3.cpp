// skly3: batch computations with three-dimensional Sklyanin algebras.
// Every command prints one JSON report on stdout.
// Exit codes: 0 success, 2 validation error, 3 consistency finding.

#include "skly3/center_pi.hpp"
#include "skly3/graded_quotient.hpp"
#include "skly3/hesse.hpp"
#include "skly3/orbit_ring.hpp"
#include "skly3/rep_io.hpp"
#include "skly3/reps.hpp"
#include "skly3/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

using json = nlohmann::json;
using namespace skly3;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Inputs {
  std::string field = "Q";
  bool field_given = false;
  std::optional<std::string> a, b, c;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  unsigned max_order = 200;

  // hilbert
  std::size_t max_degree = 6;
  bool mod_g = false;
  std::optional<std::string> central;
  // center
  std::string mode = "skew";
  std::optional<std::string> q;
  unsigned n = 2;
  // verify-rep
  std::optional<std::string> rep_path;
  std::optional<std::string> family;
  int which = 1;
  int variant = 1;
  std::string z3 = "1", z4 = "1", fx = "1", fy = "1", fz = "1", fp = "1";
  // search
  std::size_t d = 2;
  std::size_t restarts = 50;
  unsigned threads = 0;
  std::optional<std::string> out;
  // curve
  std::optional<std::string> point;
  // orbit
  std::string lambda = "1";
  bool demo = false;
};

/// A consistency finding that forces exit code 3.
struct Finding {
  std::string kind;
  json witness;
};

struct Outcome {
  json results = json::object();
  std::vector<Finding> findings;
};

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

template <class F>
std::string fmt(const typename F::Element& e) {
  return format_scalar(Scalar(e));
}

template <class F>
typename F::Element parse_in(const F& f, const std::string& text) {
  return to_element(f, parse_scalar(text, detail::tag_of(f)));
}

template <class F>
ParameterTriple<F> params_from(const F& f, const Inputs& in) {
  if (!in.a || !in.b || !in.c) throw ValidationError("--a, --b and --c are required");
  return ParameterTriple<F>(f, parse_in(f, *in.a), parse_in(f, *in.b), parse_in(f, *in.c));
}

SigmaOrderOptions sigma_options(const Inputs& in) {
  SigmaOrderOptions o;
  o.max_order = in.max_order;
  return o;
}

json sigma_json(const SigmaOrder& s, json& into) {
  if (s.order)
    into["sigma_order"] = *s.order;
  else
    into["sigma_order_exceeds"] = s.max_order;
  into["sigma_method"] = s.method;
  into["sigma_residual"] = s.residual;
  return into;
}

json bounds_json(const DimensionBounds& b) {
  return {{"torsionfree", {b.torsionfree_min, b.torsionfree_max}}, {"torsion", b.torsion}};
}

std::string torsion_label(TorsionType t) {
  switch (t) {
  case TorsionType::g_torsion: return "g-torsion";
  case TorsionType::g_torsionfree: return "g-torsionfree";
  default: return "not-applicable";
  }
}

template <class F>
json vectors_json(const std::vector<std::vector<typename F::Element>>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json row = json::array();
    for (const auto& e : v) row.push_back(fmt<F>(e));
    out.push_back(row);
  }
  return out;
}

// ---------------------------------------------------------------- classify

template <class F>
Outcome run_classify(const F& f, const Inputs& in) {
  const auto p = params_from(f, in);
  const auto cls = classify_params(p, sigma_options(in));
  const auto pi = pi_report(p, sigma_options(in));
  Outcome o;
  json& r = o.results;
  r["in_D"] = cls.in_degenerate_set_D;
  r["condition_2"] = cls.satisfies_condition_2;
  r["sklyanin"] = cls.is_sklyanin();
  r["classification"] = to_string(cls.curve);
  r["lambda"] = fmt<F>(cls.lambda);
  r["mu"] = fmt<F>(cls.mu);
  sigma_json(cls.sigma, r);
  if (pi.pi_degree) {
    r["pi_degree"] = *pi.pi_degree;
    r["b_pi_degree"] = *pi.b_pi_degree;
    r["dim_bounds"] = bounds_json(*pi.bounds);
  } else if (pi.smooth) {
    r["not_pi_up_to_bound"] = cls.sigma.max_order;
  }
  r["rank_four_over_center"] = pi.rank_four_over_center;
  if constexpr (F::is_exact) {
    const auto s = solve_dim1(p);
    r["dim1_solutions"] = to_string(s.kind);
  }
  return o;
}

// ---------------------------------------------------------------- curve

template <class F>
Outcome run_curve(const F& f, const Inputs& in) {
  const auto p = params_from(f, in);
  const CurveSpec<F> curve(p);
  Outcome o;
  json& r = o.results;
  r["point_scheme"] = point_scheme(p).to_string();
  r["cubic"] = curve.cubic_form().to_string();
  r["lambda"] = fmt<F>(curve.lambda());
  r["mu"] = fmt<F>(curve.mu());
  r["classification"] = to_string(curve.classification());
  sigma_json(sigma_order(p, sigma_options(in)), r);
  if (curve.is_smooth()) r["translation_point"] = translation_point(p).to_string();
  if (in.point) {
    std::vector<std::string> parts;
    std::stringstream ss(*in.point);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3) throw ValidationError("--point needs three comma-separated scalars");
    const ProjPoint<F> pt(f, parse_in(f, parts[0]), parse_in(f, parts[1]), parse_in(f, parts[2]));
    const auto img = sigma_apply(p, pt);
    r["point"] = pt.to_string();
    r["on_curve"] = curve.contains(pt);
    if (auto* q = std::get_if<ProjPoint<F>>(&img))
      r["sigma_image"] = q->to_string();
    else
      r["sigma_image"] = "base_point";
  }
  return o;
}

// ---------------------------------------------------------------- hilbert

template <class F>
Outcome run_hilbert(const F& f, const Inputs& in) {
  const auto p = params_from(f, in);
  if (in.max_degree > 20) throw ValidationError("--max-degree is limited to 20");
  Outcome o;
  json& r = o.results;
  const GradedTruncation<F> s(f, relation_list(p), in.max_degree);
  r["dims"] = s.hilbert_function();
  if (in.mod_g) r["dims_mod_g"] = quotient_dims_mod_g(p, in.max_degree);
  if (in.central) {
    const auto poly = parse_ncpoly(*in.central, f);
    if (!poly.is_homogeneous() || poly.is_zero()) throw ValidationError("--central needs a nonzero homogeneous polynomial");
    r["central"] = is_central(poly, relation_list(p));
    r["central_polynomial"] = poly.to_string();
  }
  return o;
}

// ---------------------------------------------------------------- center

Outcome run_center(const Inputs& in) {
  Outcome o;
  json& r = o.results;
  r["mode"] = in.mode;
  if (in.mode == "skew") {
    const FieldTag tag = FieldTag::parse(in.field);
    if (!tag.is_exact()) throw ValidationError("skew mode needs an exact field");
    const CyclotomicField f(tag.m);
    const auto q = parse_in(f, in.q.value_or("1"));
    const auto rep = skew_center_report(f, q, static_cast<unsigned>(in.max_degree));
    r["q"] = fmt<CyclotomicField>(q);
    r["q_order"] = rep.q_order;
    r["m"] = rep.m;
    json mons = json::array();
    for (const auto& e : rep.central_monomials) mons.push_back(e);
    r["central_monomials"] = mons;
    r["kappa"] = fmt<CyclotomicField>(rep.kappa);
    r["relation_holds"] = rep.relation_holds;
    r["g_scalar"] = fmt<CyclotomicField>(rep.g_scalar);
    r["xyz_central"] = rep.xyz_central;
    r["powers_central_at_m"] = rep.powers_central_at_m;
    r["powers_central_at_q_order"] = rep.powers_central_at_q_order;
    r["kappa_order"] = rep.kappa_order;
    if (!rep.xyz_central || !rep.kappa_order_divides)
      o.findings.push_back({"skew_center_inconsistent", {{"xyz_central", rep.xyz_central}, {"kappa_order", rep.kappa_order}}});
  } else if (in.mode == "shat") {
    const auto c = shat_center_check();
    r["central"] = c.ok;
    json el = json::object();
    for (const auto& [name, ok] : c.elements) el[name] = ok;
    r["elements"] = el;
    r["control_xy_noncentral"] = c.control_noncentral;
    if (!c.ok || !c.control_noncentral) o.findings.push_back({"shat_center_failed", el});
  } else if (in.mode == "invariants") {
    if (in.n < 1) throw ValidationError("--n must be positive");
    const auto c = invariant_ring_check(in.n, static_cast<unsigned>(in.max_degree));
    r["n"] = c.n;
    r["max_degree"] = c.max_degree;
    r["ok"] = c.ok;
    r["invariant_monomials"] = c.invariant_count;
    if (c.witness) {
      r["witness"] = *c.witness;
      o.findings.push_back({"invariant_not_generated", *c.witness});
    }
  } else {
    throw ValidationError("unknown center mode " + in.mode);
  }
  return o;
}

// ---------------------------------------------------------------- verify-rep

template <class F>
void report_rep(const ParameterTriple<F>& p, const MatRep<F>& rep, double tol, Outcome& o,
                std::optional<bool> claimed_irreducible) {
  json& r = o.results;
  const auto cls = classify_rep(p, rep, F::is_exact ? 1e-8 : std::max(tol, 1e-8));
  r["dimension"] = rep.dimension();
  r["provenance"] = to_string(rep.provenance);
  if (cls.residual.exact_zero)
    r["residual"] = "0";
  else
    r["residual"] = cls.residual.value;
  const bool satisfies = cls.residual.satisfies(F::is_exact ? 0.0 : tol);
  r["satisfies"] = satisfies;
  r["irreducible"] = cls.irreducible;
  r["closure_dimension"] = cls.closure_dimension;
  if (cls.g.scalar)
    r["g_scalar"] = fmt<F>(*cls.g.scalar);
  else
    r["g_scalar"] = "non_scalar";
  r["torsion"] = torsion_label(cls.g.torsion);
  if (cls.witness) r["invariant_subspace"] = vectors_json<F>(*cls.witness);

  if (rep.provenance == Provenance::explicit_family && !satisfies)
    o.findings.push_back({"family_does_not_verify", {{"residual", cls.residual.value}}});
  if (satisfies && cls.schur_defect && F::is_exact)
    o.findings.push_back({"non_scalar_g_on_irreducible", json::object()});
  if (claimed_irreducible && *claimed_irreducible != cls.irreducible) {
    json w{{"claimed_irreducible", *claimed_irreducible}, {"computed_irreducible", cls.irreducible}};
    if (cls.witness) w["invariant_subspace"] = vectors_json<F>(*cls.witness);
    o.findings.push_back({"irreducibility_differs_from_claim", w});
  }
  if (satisfies && cls.irreducible && rep.dimension() > 1) {
    const auto so = sigma_order(p);
    const CurveSpec<F> curve(p);
    if (so.order && p.is_sklyanin() && curve.is_smooth()) {
      const auto b = dimension_bounds(*so.order);
      const bool g_torsion = cls.g.torsion == TorsionType::g_torsion;
      const bool ok = g_torsion ? rep.dimension() == b.torsion
                                : rep.dimension() >= b.torsionfree_min && rep.dimension() <= b.torsionfree_max;
      r["dim_bounds"] = bounds_json(b);
      r["within_dim_bounds"] = ok;
      if (!ok) o.findings.push_back({"dimension_outside_bounds", {{"dimension", rep.dimension()}, {"bounds", bounds_json(b)}}});
    }
  }
}

template <class F>
Outcome run_verify_from_file(const F& f, const Inputs& in, const RepFile& file) {
  const auto p = params_from(f, in);
  Outcome o;
  report_rep(p, to_matrep(f, file), in.tol, o, std::nullopt);
  return o;
}

Outcome run_verify_family(const Inputs& in) {
  const FieldTag tag = FieldTag::parse(in.field_given ? in.field : (*in.family == "s1m1m1" ? "Q(zeta_12)" : "Q"));
  auto go = [&](const auto& f) -> Outcome {
    Outcome o;
    if (*in.family == "s1m1m1") {
      Inputs fixed = in;
      if (!fixed.a) fixed.a = "1";
      if (!fixed.b) fixed.b = "-1";
      if (!fixed.c) fixed.c = "-1";
      const auto p = params_from(f, fixed);
      const auto z3 = parse_in(f, in.z3), z4 = parse_in(f, in.z4);
      const auto rep = family_s1m1m1(f, in.which, z3, z4, in.variant);
      o.results["family"] = "s1m1m1";
      o.results["which"] = in.which;
      report_rep(p, rep, in.tol, o, !f.is_zero(z4));
    } else if (*in.family == "degenerate") {
      const auto p = params_from(f, in);
      if (!p.in_degenerate_set_D()) throw ValidationError("parameters are not in the degenerate set");
      if (in.n < 1) throw ValidationError("--n must be positive");
      const auto rep = family_degenerate(p, in.n, parse_in(f, in.fx), parse_in(f, in.fy), parse_in(f, in.fz), parse_in(f, in.fp));
      o.results["family"] = "degenerate";
      o.results["case"] = to_string(degenerate_case(p));
      o.results["n"] = in.n;
      report_rep(p, rep, in.tol, o, true);
    } else {
      throw ValidationError("unknown family " + *in.family);
    }
    return o;
  };
  if (tag.is_exact()) return go(CyclotomicField(tag.m));
  return go(ComplexField(1e-9));
}

// ---------------------------------------------------------------- search

Outcome run_search(const Inputs& in) {
  if (in.d < 1) throw ValidationError("--d must be positive");
  if (!in.a || !in.b || !in.c) throw ValidationError("--a, --b and --c are required");
  const FieldTag tag = FieldTag::parse(in.field);
  const ComplexField cf(1e-9);
  auto embed = [&](const std::string& s) { return embed_complex(parse_scalar(s, tag)).complex_value(); };
  const ParameterTriple<ComplexField> p(cf, embed(*in.a), embed(*in.b), embed(*in.c));
  SearchOptions opt;
  opt.restarts = in.restarts;
  opt.tolerance = in.tol;
  opt.seed = in.seed;
  opt.threads = in.threads;
  const auto hits = search_numeric(p, in.d, opt);

  Outcome o;
  json& r = o.results;
  r["dimension"] = in.d;
  r["restarts"] = in.restarts;
  std::optional<DimensionBounds> bounds;
  {
    const auto so = sigma_order(p);
    const CurveSpec<ComplexField> curve(p);
    if (so.order && p.is_sklyanin() && curve.is_smooth()) bounds = dimension_bounds(*so.order);
    sigma_json(so, r);
  }
  json list = json::array();
  std::size_t irreducible_count = 0;
  const SearchHit* best = nullptr;
  for (const auto& h : hits) {
    json e;
    e["restart"] = h.restart;
    e["objective"] = h.objective;
    e["residual"] = h.classification.residual.value;
    e["irreducible"] = h.classification.irreducible;
    e["closure_dimension"] = h.classification.closure_dimension;
    e["trivial"] = h.trivial;
    e["g_scalar"] = h.classification.g.scalar ? json(format_scalar(Scalar(*h.classification.g.scalar))) : json("non_scalar");
    e["torsion"] = torsion_label(h.classification.g.torsion);
    auto eig = [](const std::vector<cplx>& v) {
      json a = json::array();
      for (auto z : v) a.push_back({z.real(), z.imag()});
      return a;
    };
    e["eigenvalues_x"] = eig(h.eigen_x);
    e["eigenvalues_y"] = eig(h.eigen_y);
    e["eigenvalues_g"] = eig(h.eigen_g);
    list.push_back(e);
    if (h.classification.irreducible && !h.trivial) {
      ++irreducible_count;
      if (!best || !best->classification.irreducible) best = &h;
      if (bounds) {
        const bool g_torsion = h.classification.g.torsion == TorsionType::g_torsion;
        const bool ok = g_torsion ? in.d == bounds->torsion : in.d >= bounds->torsionfree_min && in.d <= bounds->torsionfree_max;
        if (!ok && in.d > 1)
          o.findings.push_back({"dimension_outside_bounds", {{"restart", h.restart}, {"dimension", in.d}, {"bounds", bounds_json(*bounds)}}});
      }
    }
    if (!best && !h.trivial) best = &h;
  }
  r["accepted"] = hits.size();
  r["irreducible"] = irreducible_count;
  r["hits"] = list;
  if (bounds) r["dim_bounds"] = bounds_json(*bounds);
  if (in.out) {
    if (!best) {
      r["written"] = nullptr;
    } else {
      std::ofstream f(*in.out);
      if (!f) throw ValidationError("cannot write " + *in.out);
      f << rep_to_json(best->rep, FieldTag::complex()).dump(2) << "\n";
      r["written"] = *in.out;
      r["written_restart"] = best->restart;
    }
  }
  return o;
}

// ---------------------------------------------------------------- orbit

Outcome run_orbit(const Inputs& in) {
  if (in.n < 1) throw ValidationError("--n must be positive");
  const FieldTag tag = FieldTag::parse(in.field);
  if (!tag.is_exact()) throw ValidationError("orbit needs an exact field");
  const CyclotomicField f(tag.m);
  const auto lambda = parse_in(f, in.lambda);
  if (f.is_zero(lambda)) throw ValidationError("--lambda must be nonzero");
  Outcome o;
  json& r = o.results;
  const std::size_t n = in.n;
  r["n"] = n;
  bool phi_ok = true;
  json table = json::array();
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t j = 0; i + j <= 2; ++j)
      for (std::size_t l = 1; l <= n; ++l)
        for (std::size_t k = 1; k <= n; ++k) {
          const auto e = OrbitElement<CyclotomicField>::basis(f, n, i, l);
          const auto g = OrbitElement<CyclotomicField>::basis(f, n, j, k);
          const auto prod = orbit_mul(e, g);
          phi_ok = phi_ok && phi_to_matrix(prod) == phi_to_matrix(e) * phi_to_matrix(g);
          if (!in.demo) continue;
          json coeffs = json::array();
          for (const auto& c : prod.coeffs) coeffs.push_back(fmt<CyclotomicField>(c));
          table.push_back({{"left", {{"degree", i}, {"index", l}}}, {"right", {{"degree", j}, {"index", k}}}, {"product", coeffs}});
        }
  if (in.demo) r["table"] = table;
  r["phi_multiplicative"] = phi_ok;
  const auto gens = evaluation_irrep(f, n, lambda);
  const auto irr = irreducibility(gens);
  r["lambda"] = fmt<CyclotomicField>(lambda);
  r["irrep_dimension"] = n;
  r["irrep_irreducible"] = irr.irreducible;
  r["phi_degree1"] = phi_to_matrix(OrbitElement<CyclotomicField>::basis(f, n, 1, 1)).to_string();
  if (!phi_ok || !irr.irreducible)
    o.findings.push_back({"orbit_ring_inconsistent", {{"phi_multiplicative", phi_ok}, {"irreducible", irr.irreducible}}});
  return o;
}

template <class Fn>
Outcome with_field(const Inputs& in, Fn&& fn) {
  const FieldTag tag = FieldTag::parse(in.field);
  if (tag.is_exact()) return fn(CyclotomicField(tag.m));
  return fn(ComplexField(1e-9));
}

json input_echo(const std::string& command, const Inputs& in) {
  json j;
  j["field"] = in.field;
  j["seed"] = in.seed;
  j["tol"] = in.tol;
  if (in.a || in.b || in.c) j["params"] = {in.a.value_or(""), in.b.value_or(""), in.c.value_or("")};
  if (command == "classify" || command == "curve") j["max_order"] = in.max_order;
  if (command == "hilbert") j["max_degree"] = in.max_degree;
  if (command == "center") {
    j["mode"] = in.mode;
    j["max_degree"] = in.max_degree;
    if (in.q) j["q"] = *in.q;
    if (in.mode == "invariants") j["n"] = in.n;
  }
  if (command == "verify-rep") {
    if (in.rep_path) j["rep"] = *in.rep_path;
    if (in.family) j["family"] = *in.family;
  }
  if (command == "search") {
    j["d"] = in.d;
    j["restarts"] = in.restarts;
  }
  if (command == "orbit") {
    j["n"] = in.n;
    j["lambda"] = in.lambda;
  }
  return j;
}

} // namespace

int main(int argc, char** argv) {
  Inputs in;
  if (const char* env = std::getenv("SKLY3_TOL")) {
    try {
      in.tol = std::stod(env);
    } catch (...) {
      std::cerr << "ignoring malformed SKLY3_TOL\n";
    }
  }

  CLI::App app{"Computations with three-dimensional Sklyanin algebras S(a,b,c)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool params) {
    sub->add_option("--field", in.field, "Q, Q(zeta_m) or complex")->each([&](const std::string&) { in.field_given = true; });
    sub->add_option("--seed", in.seed, "random seed, echoed in the report");
    sub->add_option("--tol", in.tol, "numerical tolerance (default from SKLY3_TOL)");
    if (params) {
      sub->add_option("--a", in.a, "parameter a");
      sub->add_option("--b", in.b, "parameter b");
      sub->add_option("--c", in.c, "parameter c");
    }
  };

  auto* classify = app.add_subcommand("classify", "curve type, order of sigma, PI degree and dimension bounds");
  add_common(classify, true);
  classify->add_option("--max-order", in.max_order)->check(CLI::PositiveNumber);

  auto* curve = app.add_subcommand("curve", "point scheme, sigma and its order");
  add_common(curve, true);
  curve->add_option("--max-order", in.max_order)->check(CLI::PositiveNumber);
  curve->add_option("--point", in.point, "x,y,z to apply sigma to");

  auto* hilbert = app.add_subcommand("hilbert", "dimensions of graded pieces");
  add_common(hilbert, true);
  hilbert->add_option("--max-degree", in.max_degree);
  hilbert->add_flag("--mod-g", in.mod_g, "also dimensions of S/Sg");
  hilbert->add_option("--central", in.central, "homogeneous polynomial to test for centrality");

  auto* center = app.add_subcommand("center", "center computations");
  add_common(center, false);
  center->add_option("--mode", in.mode)->check(CLI::IsMember({"skew", "shat", "invariants"}));
  center->add_option("--q", in.q, "skew parameter (root of unity)");
  center->add_option("--n", in.n);
  center->add_option("--max-degree", in.max_degree);

  auto* verify = app.add_subcommand("verify-rep", "check a representation");
  add_common(verify, true);
  verify->add_option("--rep", in.rep_path, "representation JSON file");
  verify->add_option("--family", in.family, "s1m1m1 or degenerate")->check(CLI::IsMember({"s1m1m1", "degenerate"}));
  verify->add_option("--which", in.which, "s1m1m1 family index (1 or 2)");
  verify->add_option("--variant", in.variant, "sign for family 1, root exponent for family 2");
  verify->add_option("--z3", in.z3);
  verify->add_option("--z4", in.z4);
  verify->add_option("--n", in.n, "block size of the degenerate family");
  verify->add_option("--x", in.fx);
  verify->add_option("--y", in.fy);
  verify->add_option("--z", in.fz);
  verify->add_option("--p", in.fp);

  auto* search = app.add_subcommand("search", "numerical search for matrix solutions");
  add_common(search, true);
  search->add_option("--d", in.d, "matrix size");
  search->add_option("--restarts", in.restarts);
  search->add_option("--threads", in.threads);
  search->add_option("--out", in.out, "write the best representation found");

  auto* orbit = app.add_subcommand("orbit", "finite-orbit ring and its matrix model");
  add_common(orbit, false);
  orbit->add_option("--n", in.n, "orbit size");
  orbit->add_option("--lambda", in.lambda, "evaluation value for x^n");
  orbit->add_flag("--demo", in.demo, "print the multiplication table in degree <= 2");

  json report;
  int code = 0;
  std::string command = "?";
  const auto t0 = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
    command = app.get_subcommands().front()->get_name();
    Outcome o;
    if (command == "classify")
      o = with_field(in, [&](const auto& f) { return run_classify(f, in); });
    else if (command == "curve")
      o = with_field(in, [&](const auto& f) { return run_curve(f, in); });
    else if (command == "hilbert")
      o = with_field(in, [&](const auto& f) { return run_hilbert(f, in); });
    else if (command == "center")
      o = run_center(in);
    else if (command == "verify-rep") {
      if (in.rep_path.has_value() == in.family.has_value()) throw ValidationError("give exactly one of --rep and --family");
      if (in.rep_path) {
        const RepFile file = read_rep_file(*in.rep_path);
        if (!in.field_given) in.field = file.field.name();
        if (FieldTag::parse(in.field).name() != file.field.name())
          throw ValidationError("--field " + in.field + " differs from the file's field " + file.field.name());
        o = with_field(in, [&](const auto& f) { return run_verify_from_file(f, in, file); });
      } else {
        o = run_verify_family(in);
      }
    } else if (command == "search")
      o = run_search(in);
    else if (command == "orbit")
      o = run_orbit(in);
    report["results"] = o.results;
    json findings = json::array();
    for (const auto& f : o.findings) findings.push_back({{"kind", f.kind}, {"witness", f.witness}});
    report["findings"] = findings;
    report["status"] = o.findings.empty() ? "ok" : "finding";
    code = o.findings.empty() ? 0 : 3;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report["status"] = "error";
    report["error"] = e.what();
    code = 2;
  } catch (const ValidationError& e) {
    report["status"] = "error";
    report["error"] = e.what();
    code = 2;
  } catch (const skly3::Error& e) {
    report["status"] = "error";
    report["error"] = e.what();
    code = 2;
  } catch (const std::exception& e) {
    report["status"] = "internal_error";
    report["error"] = e.what();
    code = 3;
  }
  report["command"] = command;
  report["version"] = kVersion;
  report["input"] = input_echo(command, in);
  report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  std::cout << report.dump(2) << std::endl;
  return code;
}
