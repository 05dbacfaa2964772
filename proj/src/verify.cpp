#include "micz/verify.hpp"

#include <algorithm>
#include <cmath>

#include "micz/batch.hpp"
#include "micz/conic_geometry.hpp"
#include "micz/dynamics.hpp"
#include "micz/lorentz.hpp"

namespace micz::verify {

EuclideanOrbitParams random_params(Rng& rng)
{
    for (;;) {
        EuclideanOrbitParams p{rng.uniform_vec3(-2.0, 2.0), rng.uniform_vec3(-2.0, 2.0)};
        const double mu = dot3(p.L, p.A);
        if (dot3(p.L, p.L) - mu * mu > 0.01)
            return p;
    }
}

EuclideanOrbitParams random_params_of_class(Rng& rng, OrbitClass cls)
{
    // Exactly parabolic parameters form a measure-zero set, so rejection
    // sampling cannot reach them; translate the canonical null pair by a
    // random symmetry instead.
    if (cls == OrbitClass::Parabolic) {
        const MinkowskiOrbitParams p =
            act(random_element(rng.bits(), 2.0), canonical_parabolic_pair());
        return to_euclidean(p);
    }
    for (;;) {
        EuclideanOrbitParams p = random_params(rng);
        const MinkowskiOrbitParams m = to_minkowski(p);
        if (classify(m) != cls)
            continue;
        if (std::abs(mdot(m.a, m.a)) <= 100.0 * kClassifyTol)
            continue;
        return p;
    }
}

namespace {

struct Check {
    FamilyResult res;

    explicit Check(std::string name)
    {
        res.name = std::move(name);
        res.pass = true;
    }

    void expect(bool ok, double magnitude, const std::string& what)
    {
        ++res.cases;
        res.worst = std::max(res.worst, magnitude);
        if (!ok && res.pass) {
            res.pass = false;
            res.detail = what;
        } else if (!ok) {
            res.pass = false;
        }
    }

    // residual-style check: pass iff value < bound; worst tracks the value
    void below(double value, double bound, const std::string& what)
    {
        expect(value < bound, value, what + " = " + std::to_string(value));
    }
};

double rel_scale(double ref) { return std::max(1.0, std::abs(ref)); }

FamilyResult family_validation(Rng& rng, int count, double perturb)
{
    Check c("validation");
    for (int i = 0; i < count; ++i) {
        const EuclideanOrbitParams p = random_params(rng);
        const auto er = validate_euclidean(p);
        c.expect(er.ok(), 0.0, "euclidean validation: " + er.describe());
        MinkowskiOrbitParams m = to_minkowski(p);
        if (perturb != 0.0)
            m.l.x1 += perturb;
        const auto mr = validate_minkowski(m);
        c.expect(mr.ok(), 0.0, "minkowski validation: " + mr.describe());
    }
    return c.res;
}

void fill_batch(Rng& rng, int count, batch::EuclideanBatch& b,
                std::vector<EuclideanOrbitParams>& params)
{
    for (int i = 0; i < count; ++i) {
        const EuclideanOrbitParams p = random_params(rng);
        params.push_back(p);
        b.push_back(p.A.x, p.A.y, p.A.z, p.L.x, p.L.y, p.L.z);
    }
}

FamilyResult family_roundtrip(const batch::SweepResults& sweep,
                              const std::vector<EuclideanOrbitParams>& params)
{
    Check c("roundtrip");
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double scale =
            rel_scale(std::max(norm3(params[i].A), norm3(params[i].L)));
        c.below(sweep.roundtrip[i] / scale, 1e-12, "bijection round-trip residual");
        c.below(sweep.l_norm[i], 1e-12, "|l^2 + 1|");
        c.below(sweep.a_dot_l[i], 1e-12, "|a . l|");
        c.expect(sweep.a0[i] > 0.0, 0.0, "a0 > 0");
    }
    return c.res;
}

FamilyResult family_energy(const batch::SweepResults& sweep,
                           const std::vector<EuclideanOrbitParams>& params)
{
    Check c("energy");
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double e = energy_euclidean(params[i]);
        c.below(sweep.energy_gap[i] / (1.0 + std::abs(e)), 1e-12,
                "energy representation gap");
    }
    return c.res;
}

FamilyResult family_eccentricity(const batch::SweepResults& sweep,
                                 const std::vector<EuclideanOrbitParams>& params)
{
    Check c("eccentricity");
    for (std::size_t i = 0; i < params.size(); ++i) {
        const EuclideanOrbitParams& p = params[i];
        const double mu = magnetic_charge(p);
        const double m = dot3(p.L, p.L) - mu * mu;
        const double rhs = m * (1.0 - dot3(p.A, p.A));
        c.below(sweep.ecc_identity[i] / rel_scale(rhs), 1e-12,
                "1 - e^2 identity residual");
    }
    return c.res;
}

FamilyResult family_synthesis(Rng& rng, int count)
{
    Check c("synthesis");
    for (int i = 0; i < count; ++i) {
        const EuclideanOrbitParams p = random_params(rng);
        const PhaseState s = synthesize_initial_state(p);
        const Vec3 dL = angular_momentum(s) - p.L;
        const Vec3 dA = lenz_vector(s) - p.A;
        const double worst =
            std::max({std::abs(dL.x), std::abs(dL.y), std::abs(dL.z), std::abs(dA.x),
                      std::abs(dA.y), std::abs(dA.z)});
        c.below(worst, 1e-10, "kinematic invariant mismatch after synthesis");
        c.below(std::abs(s.mu - magnetic_charge(p)), 1e-12, "synthesized mu mismatch");
    }
    return c.res;
}

FamilyResult family_conservation(Rng& rng, int count)
{
    Check c("conservation");
    const int n_traj = std::max(3, count / 10);
    const OrbitClass classes[3] = {OrbitClass::Elliptic, OrbitClass::Parabolic,
                                   OrbitClass::Hyperbolic};
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-12;
    for (int i = 0; i < n_traj; ++i) {
        const EuclideanOrbitParams p = random_params_of_class(rng, classes[i % 3]);
        const PhaseState s0 = synthesize_initial_state(p);
        const Trajectory tr = integrate(s0, 50.0, cfg);
        const DriftReport dr = drift_report(tr);
        c.below(dr.max_dL, 1e-6, "angular momentum drift");
        c.below(dr.max_dA, 1e-6, "Lenz vector drift");
        c.below(dr.max_dE, 1e-6, "energy drift");

        const double mu = magnetic_charge(p);
        const Vec3 binormal = p.L - mu * p.A;
        double worst_mu = 0.0, worst_locus = 0.0;
        bool oriented = true;
        for (const auto& s : tr.samples) {
            worst_mu = std::max(
                worst_mu, std::abs(dot3(angular_momentum(s), lenz_vector(s)) - s.mu));
            const OrbitResiduals rho = orbit_residuals(p, s.q);
            worst_locus = std::max({worst_locus, std::abs(rho.rho1), std::abs(rho.rho2),
                                    std::abs(rho.rho_plane)});
            if (!(dot3(cross3(s.v, acceleration(s.q, s.v, s.mu)), binormal) > 0.0))
                oriented = false;
        }
        c.below(worst_mu, 1e-8, "dot3(L, A) - mu along the flow");
        c.below(worst_locus, 1e-6, "orbit-locus residual along the flow");
        c.expect(oriented, 0.0, "binormal orientation along the flow");
    }
    return c.res;
}

FamilyResult family_sampling(Rng& rng, int count)
{
    Check c("sampling");
    const OrbitClass classes[3] = {OrbitClass::Elliptic, OrbitClass::Parabolic,
                                   OrbitClass::Hyperbolic};
    for (int i = 0; i < count; ++i) {
        const EuclideanOrbitParams pe = random_params_of_class(rng, classes[i % 3]);
        const MinkowskiOrbitParams pm = to_minkowski(pe);
        const auto pts = sample_orbit_lifted(pm, 32);
        double worst = 0.0;
        for (const auto& x : pts) {
            const auto [pr1, pr2] = plane_residuals(pm, x);
            const OrbitResiduals rho = orbit_residuals(pe, x.spatial());
            worst = std::max({worst, std::abs(pr1), std::abs(pr2),
                              std::abs(mdot(x, x)), std::abs(rho.rho1),
                              std::abs(rho.rho2), std::abs(rho.rho_plane)});
        }
        c.below(worst, 1e-9, "orbit sample residual");
    }
    return c.res;
}

FamilyResult family_canonicalization(Rng& rng, int count)
{
    Check c("canonicalization");
    for (int i = 0; i < count; ++i) {
        const MinkowskiOrbitParams p =
            to_minkowski(random_params_of_class(rng, OrbitClass::Elliptic));
        const OrientedSymmetry g = canonicalize_elliptic(p);
        c.below(params_distance(act(g, p), canonical_elliptic_pair()), 1e-8,
                "elliptic canonicalization residual");
    }
    for (int i = 0; i < count; ++i) {
        const OrientedSymmetry h = random_element(rng.bits(), 2.5);
        const MinkowskiOrbitParams p = act(h, canonical_parabolic_pair());
        const OrientedSymmetry g = canonicalize_parabolic(p);
        c.below(params_distance(act(g, p), canonical_parabolic_pair()), 1e-8,
                "parabolic canonicalization residual");
    }
    return c.res;
}

FamilyResult family_transport(Rng& rng, int count)
{
    Check c("transport");
    const int pairs = std::max(2, count / 2);
    for (int i = 0; i < pairs; ++i) {
        const MinkowskiOrbitParams p1 =
            to_minkowski(random_params_of_class(rng, OrbitClass::Elliptic));
        const MinkowskiOrbitParams p2 =
            to_minkowski(random_params_of_class(rng, OrbitClass::Elliptic));
        c.below(params_distance(act(transport(p1, p2), p1), p2), 1e-7,
                "elliptic transport residual");
    }
    for (int i = 0; i < pairs; ++i) {
        const MinkowskiOrbitParams p1 =
            act(random_element(rng.bits(), 2.5), canonical_parabolic_pair());
        const MinkowskiOrbitParams p2 =
            act(random_element(rng.bits(), 2.5), canonical_parabolic_pair());
        c.below(params_distance(act(transport(p1, p2), p1), p2), 1e-7,
                "parabolic transport residual");
    }
    // different magnetic charges: mu = 0 circle to a mu = 1 ellipse
    const MinkowskiOrbitParams circle = canonical_elliptic_pair();
    const MinkowskiOrbitParams charged =
        to_minkowski({{0.5, 0.0, 0.5}, {0.0, 0.0, 2.0}});
    c.below(params_distance(act(transport(circle, charged), circle), charged), 1e-7,
            "cross-charge transport residual");
    return c.res;
}

FamilyResult family_sign_preservation(Rng& rng, int count)
{
    Check c("sign_preservation");
    for (int i = 0; i < count; ++i) {
        const OrientedSymmetry g = random_element(rng.bits(), 3.0);
        // future timelike and future null test vectors
        const Vec3 dir = rng.unit_vec3();
        const double a0 = rng.uniform(0.5, 3.0);
        const MinkVec4 timelike = make_mink(a0, rng.uniform(0.0, 0.99) * a0 * dir);
        const MinkVec4 lightlike = make_mink(a0, a0 * dir);
        c.expect(g.Lam.apply(timelike).x0 > 0.0, 0.0, "timelike a0 flipped");
        c.expect(g.Lam.apply(lightlike).x0 > 0.0, 0.0, "null a0 flipped");
    }
    const int flips = 100;
    for (int i = 0; i < flips; ++i) {
        const double a0 = rng.uniform(0.1, 2.0);
        const MinkVec4 a = make_mink(a0, a0 * rng.uniform(1.1, 3.0) * rng.unit_vec3());
        const LorentzTransform b = spacelike_sign_flip_boost(a);
        c.expect(b.apply(a).x0 < 0.0, 0.0, "constructed counterexample failed to flip");
    }
    return c.res;
}

} // namespace

VerifyReport run_verify(std::uint64_t seed, int count, double perturb)
{
    if (count < 1)
        throw MiczError(ErrorCode::InvalidArgument, "verify: count >= 1 required");
    VerifyReport rep;
    rep.seed = seed;
    rep.count = count;

    // independent deterministic streams per family
    Rng seeder(seed);
    const std::uint64_t s_valid = seeder.bits();
    const std::uint64_t s_sweep = seeder.bits();
    const std::uint64_t s_synth = seeder.bits();
    const std::uint64_t s_cons = seeder.bits();
    const std::uint64_t s_sample = seeder.bits();
    const std::uint64_t s_canon = seeder.bits();
    const std::uint64_t s_transp = seeder.bits();
    const std::uint64_t s_sign = seeder.bits();

    {
        Rng rng(s_valid);
        rep.families.push_back(family_validation(rng, count, perturb));
    }
    {
        Rng rng(s_sweep);
        batch::EuclideanBatch b;
        std::vector<EuclideanOrbitParams> params;
        fill_batch(rng, count * 10, b, params);
        const batch::SweepResults sweep = batch::invariant_sweep(b);
        rep.families.push_back(family_roundtrip(sweep, params));
        rep.families.push_back(family_energy(sweep, params));
        rep.families.push_back(family_eccentricity(sweep, params));
    }
    {
        Rng rng(s_synth);
        rep.families.push_back(family_synthesis(rng, count));
    }
    {
        Rng rng(s_cons);
        rep.families.push_back(family_conservation(rng, count));
    }
    {
        Rng rng(s_sample);
        rep.families.push_back(family_sampling(rng, count));
    }
    {
        Rng rng(s_canon);
        rep.families.push_back(family_canonicalization(rng, count));
    }
    {
        Rng rng(s_transp);
        rep.families.push_back(family_transport(rng, count));
    }
    {
        Rng rng(s_sign);
        rep.families.push_back(family_sign_preservation(rng, count * 10));
    }

    rep.all_pass = std::all_of(rep.families.begin(), rep.families.end(),
                               [](const FamilyResult& f) { return f.pass; });
    return rep;
}

nlohmann::json to_json(const VerifyReport& rep)
{
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& f : rep.families)
        fams.push_back({{"name", f.name},
                        {"pass", f.pass},
                        {"cases", f.cases},
                        {"worst", f.worst},
                        {"detail", f.detail}});
    return {{"seed", rep.seed},
            {"count", rep.count},
            {"families", fams},
            {"all_pass", rep.all_pass}};
}

} // namespace micz::verify
