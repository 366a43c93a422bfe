//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the lines are always printed; any failure exits non-zero.

mod common;

use std::time::{Duration, Instant};

use common::*;
use gaussfid::fidelity::{
    fidelity, fidelity_general, fidelity_one_mode, fidelity_thermal, overlap, triple_overlap,
};
use gaussfid::fock::{gaussian_density, trace_product_numeric, uhlmann_fidelity_numeric, OracleEnvelope};
use gaussfid::gaussian::{
    conjugate, euler_decompose, phi, phi_residual, squeezed_thermal_state, tensor, thermal_state,
    williamson, CorrelationMatrix,
};

struct Outcome {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn line(o: &Outcome) -> String {
    format!(
        "criterion {} [{}] {}: {}",
        o.id,
        if o.pass { "PASS" } else { "FAIL" },
        o.name,
        o.detail
    )
}

fn within_time(start: Instant, limit: Duration) -> (bool, String) {
    let t = start.elapsed();
    (t < limit, format!("{:.2}s (limit {}s)", t.as_secs_f64(), limit.as_secs()))
}

fn closed_form_equivalence() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    let mut worst_one = 0.0f64;
    for _ in 0..500 {
        let a1 = random_state(&mut r, 1, 6.0, 1.0);
        let a2 = random_state(&mut r, 1, 6.0, 1.0);
        let general = fidelity_general(&a1, &a2, &TOL).unwrap().fidelity;
        let closed = fidelity_one_mode(&a1, &a2, &TOL).unwrap();
        worst_one = worst_one.max((general - closed).abs());
    }
    let mut worst_thermal = 0.0f64;
    for k in 0..200 {
        let n = 1 + k % 3;
        let a1 = random_thermal(&mut r, n, 3.0);
        let a2 = random_thermal(&mut r, n, 3.0);
        let general = fidelity_general(&a1, &a2, &TOL).unwrap().fidelity;
        let closed = fidelity_thermal(&a1, &a2, &TOL).unwrap();
        worst_thermal = worst_thermal.max((general - closed).abs());
    }
    let (fast, time) = within_time(start, Duration::from_secs(10));
    Outcome {
        id: 1,
        name: "closed-form equivalence",
        pass: worst_one <= 1e-8 && worst_thermal <= 1e-8 && fast,
        detail: format!(
            "one-mode max |Δ| = {worst_one:.2e}, thermal max |Δ| = {worst_thermal:.2e} (≤ 1e-8), {time}"
        ),
    }
}

fn oracle_grid() -> Vec<(String, CorrelationMatrix, CorrelationMatrix)> {
    let th = |n: f64| thermal_state(&[n], &TOL).unwrap();
    let sq = |n: f64, r: f64, t: f64| squeezed_thermal_state(&[n], &[r], &[t], &TOL).unwrap();
    let mut grid = Vec::new();
    let temps = [0.0, 0.5, 1.0, 2.0];
    for (i, &a) in temps.iter().enumerate() {
        for &b in &temps[i + 1..] {
            grid.push((format!("thermal {a} vs thermal {b}"), th(a), th(b)));
        }
    }
    for r in [0.3, 1.0, 1.5] {
        grid.push((format!("squeezed r={r} vs thermal 1"), sq(0.0, r, 0.0), th(1.0)));
    }
    grid.push(("squeezed r=1 θ=0 vs r=0.5 θ=0.7".into(), sq(0.0, 1.0, 0.0), sq(0.0, 0.5, 0.7)));
    grid.push(("squeezed thermal θ=1.2 vs θ=-0.4".into(), sq(0.3, 0.6, 1.2), sq(0.5, 0.3, -0.4)));

    let (s, c) = 0.6f64.sin_cos();
    let bs = RMat::from_row_slice(
        4,
        4,
        &[c, s, 0.0, 0.0, -s, c, 0.0, 0.0, 0.0, 0.0, c, s, 0.0, 0.0, -s, c],
    );
    let b1 = tensor(&sq(0.3, 0.4, 0.4), &sq(0.1, 0.5, -0.7));
    let b2 = conjugate(&tensor(&sq(0.5, 0.2, 1.3), &sq(0.2, 0.3, 0.4)), &bs, &TOL).unwrap();
    grid.push(("two-mode rotated squeezed pair".into(), b1, b2));
    grid
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let env = OracleEnvelope::default();
    let mut worst = 0.0f64;
    let mut worst_case = String::new();
    let mut failures = Vec::new();
    for (label, a1, a2) in oracle_grid() {
        let formula = fidelity(&a1, &a2, &TOL).unwrap();
        let numeric = gaussian_density(&a1, 80, &env, &TOL)
            .and_then(|r1| Ok((r1, gaussian_density(&a2, 80, &env, &TOL)?)))
            .and_then(|(r1, r2)| uhlmann_fidelity_numeric(&r1, &r2));
        match numeric {
            Ok(f) => {
                let diff = (f - formula).abs();
                if diff > worst {
                    worst = diff;
                    worst_case = label;
                }
            }
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
    let (fast, time) = within_time(start, Duration::from_secs(300));
    Outcome {
        id: 2,
        name: "oracle equivalence",
        pass: failures.is_empty() && worst <= 1e-5 && fast,
        detail: format!(
            "max |Δ| = {worst:.2e} at {worst_case} (≤ 1e-5, cutoff 80){}, {time}",
            if failures.is_empty() { String::new() } else { format!(", errors: {failures:?}") }
        ),
    }
}

fn named_values() -> Outcome {
    let mut worst = 0.0f64;
    let vac = thermal_state(&[0.0], &TOL).unwrap();
    for n in [0.5, 1.0, 2.0, 5.0] {
        let f = fidelity(&vac, &thermal_state(&[n], &TOL).unwrap(), &TOL).unwrap();
        worst = worst.max((f - 1.0 / (n + 1.0)).abs());
    }
    for r in [0.5, 1.0, 2.0] {
        let s = squeezed_thermal_state(&[0.0], &[r], &[0.0], &TOL).unwrap();
        let f = fidelity(&s, &vac, &TOL).unwrap();
        worst = worst.max((f - 1.0 / r.cosh()).abs());
    }
    let f = fidelity(
        &thermal_state(&[1.0], &TOL).unwrap(),
        &thermal_state(&[2.0], &TOL).unwrap(),
        &TOL,
    )
    .unwrap();
    worst = worst.max((f - 2.0 / (16.0 - 8.0 * 3f64.sqrt())).abs());
    Outcome {
        id: 3,
        name: "named values",
        pass: worst <= 1e-10,
        detail: format!("max |Δ| = {worst:.2e} (≤ 1e-10)"),
    }
}

fn axioms() -> Outcome {
    let start = Instant::now();
    let mut r = rng(4);
    let mut worst = [0.0f64; 6];
    let mut range_ok = true;
    let f_of = |a: &CorrelationMatrix, b: &CorrelationMatrix| fidelity(a, b, &TOL).unwrap();
    for k in 0..200 {
        let n = 1 + k % 3;
        let a = random_state(&mut r, n, 5.0, 0.8);
        let b = random_state(&mut r, n, 5.0, 0.8);
        let fab = f_of(&a, &b);
        worst[0] = worst[0].max((fab - f_of(&b, &a)).abs());
        worst[1] = worst[1].max((f_of(&a, &a) - 1.0).abs());
        range_ok &= fab > 0.0 && fab <= 1.0;

        let p = random_pure_state(&mut r, n, 0.8);
        let reduced = overlap(&p, &b).unwrap();
        worst[3] = worst[3].max((f_of(&p, &b) - reduced).abs());

        let s = random_symplectic(&mut r, n, 0.5);
        let sa = conjugate(&a, &s, &TOL).unwrap();
        let sb = conjugate(&b, &s, &TOL).unwrap();
        worst[4] = worst[4].max((f_of(&sa, &sb) - fab).abs());

        let c = random_state(&mut r, 1, 4.0, 0.6);
        let d = random_state(&mut r, 1, 4.0, 0.6);
        let joint = f_of(&tensor(&a, &c), &tensor(&b, &d));
        worst[5] = worst[5].max((joint - fab * f_of(&c, &d)).abs());
    }
    let (fast, time) = within_time(start, Duration::from_secs(30));
    let ok = worst.iter().all(|w| *w <= 1e-8) && range_ok && fast;
    Outcome {
        id: 4,
        name: "axiom suite",
        pass: ok,
        detail: format!(
            "symmetry {:.1e}, F(ρ,ρ)=1 {:.1e}, range {}, pure reduction {:.1e}, \
             symplectic invariance {:.1e}, multiplicativity {:.1e} (each ≤ 1e-8), {time}",
            worst[0],
            worst[1],
            if range_ok { "ok" } else { "violated" },
            worst[3],
            worst[4],
            worst[5]
        ),
    }
}

fn phi_correctness() -> Outcome {
    let mut r = rng(5);
    let mut worst = 0.0f64;
    for k in 0..200 {
        let a = random_state(&mut r, 1 + k % 3, 8.0, 1.0);
        let p = phi(&a, &TOL).unwrap();
        worst = worst.max(phi_residual(&a, &p.phi) / max_abs(a.matrix()));
    }
    Outcome {
        id: 5,
        name: "Φ correctness",
        pass: worst <= 1e-8,
        detail: format!("max |Φ − JΦ⁻¹J − 2A| / ‖A‖ = {worst:.2e} (≤ 1e-8)"),
    }
}

fn round_trips() -> Outcome {
    let mut r = rng(6);
    let mut worst_w = 0.0f64;
    let mut worst_e = 0.0f64;
    let mut errors = 0;
    for k in 0..200 {
        let a = random_state(&mut r, 1 + k % 4, 8.0, 1.2);
        match williamson(&a, &TOL) {
            Ok(w) => worst_w = worst_w.max(w.reconstruction_residual / max_abs(a.matrix())),
            Err(_) => errors += 1,
        }
        let s = random_symplectic(&mut r, 1 + k % 4, 1.2);
        match euler_decompose(&s, &TOL) {
            Ok(e) => worst_e = worst_e.max(e.reconstruction_residual / max_abs(&s)),
            Err(_) => errors += 1,
        }
    }
    Outcome {
        id: 6,
        name: "decomposition round-trips",
        pass: errors == 0 && worst_w <= TOL.recon && worst_e <= TOL.recon,
        detail: format!(
            "Williamson {worst_w:.2e}, Euler {worst_e:.2e} relative (≤ {:e}), {errors} failures",
            TOL.recon
        ),
    }
}

fn cyclicity() -> Outcome {
    let mut r = rng(7);
    let mut worst_cycle = 0.0f64;
    for _ in 0..100 {
        let a = random_state(&mut r, 1, 5.0, 0.8);
        let b = random_state(&mut r, 1, 5.0, 0.8);
        let c = random_state(&mut r, 1, 5.0, 0.8);
        let t123 = triple_overlap(&a, &b, &c).unwrap();
        let t231 = triple_overlap(&b, &c, &a).unwrap();
        let t312 = triple_overlap(&c, &a, &b).unwrap();
        worst_cycle = worst_cycle.max((t123 - t231).norm()).max((t123 - t312).norm());
    }
    let env = OracleEnvelope::default();
    let mut worst_oracle = 0.0f64;
    for _ in 0..10 {
        let states: Vec<CorrelationMatrix> = (0..3).map(|_| random_state(&mut r, 1, 3.0, 0.5)).collect();
        let t = triple_overlap(&states[0], &states[1], &states[2]).unwrap();
        let rhos: Vec<_> = states
            .iter()
            .map(|a| gaussian_density(a, 60, &env, &TOL).unwrap())
            .collect();
        let numeric = trace_product_numeric(&[&rhos[0], &rhos[1], &rhos[2]]).unwrap();
        worst_oracle = worst_oracle.max((t - numeric).norm());
    }
    Outcome {
        id: 7,
        name: "t_ijk cyclicity",
        pass: worst_cycle <= 1e-10 && worst_oracle <= 1e-6,
        detail: format!(
            "cyclic max |Δ| = {worst_cycle:.2e} (≤ 1e-10), oracle max |Δ| = {worst_oracle:.2e} (≤ 1e-6)"
        ),
    }
}

fn main() {
    let outcomes = [
        closed_form_equivalence(),
        oracle_equivalence(),
        named_values(),
        axioms(),
        phi_correctness(),
        round_trips(),
        cyclicity(),
    ];
    for o in &outcomes {
        println!("{}", line(o));
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
