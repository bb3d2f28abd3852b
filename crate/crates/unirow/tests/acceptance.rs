//! Acceptance suite: ten numbered criteria covering the exact algebra and
//! the floating-point topology. Each test prints a single pass or fail line.

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unirow::matrices::{rank_one_det_identity, ElementaryOp, RingMatrix};
use unirow::rings::{rat_int, MonomialOrder};
use unirow::topology::{
    antipodal_obstruction, eval_row_map, mat_vec, reflection, reflection_matrix, rotation_between,
    sample_variety, vaserstein_midpoint, winding_after_factorization, winding_of_row_map,
    SampleGenerator, VarietySample, MEMBERSHIP_TOL,
};
use unirow::unimodular::euclid::euclid_complete;
use unirow::unimodular::lift::{
    lift_factorization, lift_factorization_mod, reduce_factorization, reduce_row_mod,
    reduce_row_to_quotient, transform_row_with_lift, transform_row_with_lift_mod,
};
use unirow::unimodular::skew::{conjugate_skew, quaternion_left_matrix, skew_matrix};
use unirow::unimodular::swan::{swan_complete, swan_product};
use unirow::unimodular::{vaserstein_isotopy, ElementaryFactorization, UnimodularRow};
use unirow::{parse_ring, Polynomial, RingContext};

fn check(num: &str, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("acceptance {num} {name}: pass"),
        Err(msg) => {
            println!("acceptance {num} {name}: FAIL ({msg})");
            panic!("acceptance {num} {name}: {msg}");
        }
    }
}

fn er<T>(r: unirow::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn float_det(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut d = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col].abs() < 1e-14 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            d = -d;
        }
        d *= a[col][col];
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
        }
    }
    d
}

fn dotf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normf(v: &[f64]) -> f64 {
    dotf(v, v).sqrt()
}

fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n = normf(&v);
        if n > 0.2 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

fn zc(v: i64) -> Polynomial {
    RingContext::integers().constant(rat_int(v))
}

fn zc_in(ctx: &RingContext, v: i64) -> Polynomial {
    ctx.constant(rat_int(v))
}

/// coeffs[k] * x^k over a univariate rational polynomial ring.
fn upoly(ctx: &RingContext, coeffs: &[i64]) -> Polynomial {
    let x = ctx.var("x").unwrap();
    let mut acc = ctx.zero();
    for (k, &c) in coeffs.iter().enumerate() {
        acc = ctx
            .add(&acc, &x.pow(k as u32).scale(&rat_int(c)))
            .unwrap();
    }
    acc
}

fn circle_ring() -> RingContext {
    parse_ring("Q[x,y]/(x^2+y^2-1)").unwrap()
}

fn sphere_ring() -> RingContext {
    parse_ring("Q[x,y,z]/(x^2+y^2+z^2-1)").unwrap()
}

fn circle_sample(n: usize) -> VarietySample {
    sample_variety(
        &circle_ring(),
        &SampleGenerator::Circle { samples: n },
        MEMBERSHIP_TOL,
    )
    .unwrap()
}

#[test]
fn criterion_01_rank_one_determinant_identity() {
    check("01", "rank-one determinant identity", || {
        // fully symbolic vectors of lengths 2, 3, 4
        for n in [2usize, 3, 4] {
            let names: Vec<String> = (1..=n)
                .map(|k| format!("x{k}"))
                .chain((1..=n).map(|k| format!("y{k}")))
                .collect();
            let ctx = er(RingContext::polynomial_ring(&names))?;
            let x: Vec<Polynomial> = (1..=n).map(|k| ctx.var(&format!("x{k}")).unwrap()).collect();
            let y: Vec<Polynomial> = (1..=n).map(|k| ctx.var(&format!("y{k}")).unwrap()).collect();
            let (det, expected) = er(rank_one_det_identity(&ctx, &x, &y))?;
            if det != expected {
                return Err(format!("symbolic mismatch at length {n}"));
            }
        }
        // 500 random integer instances per length against the cofactor value
        let ctx = RingContext::integers();
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for n in [2usize, 3, 4] {
            for trial in 0..500 {
                let x: Vec<Polynomial> = (0..n).map(|_| zc(rng.gen_range(-9..=9))).collect();
                let y: Vec<Polynomial> = (0..n).map(|_| zc(rng.gen_range(-9..=9))).collect();
                let (det, expected) = er(rank_one_det_identity(&ctx, &x, &y))?;
                if det != expected {
                    return Err(format!("integer mismatch at length {n}, trial {trial}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_02_euclidean_completion() {
    check("02", "euclidean completion", || {
        let start = Instant::now();
        let z = RingContext::integers();
        let e1 = [z.one(), z.zero()];
        let mut rng = ChaCha8Rng::seed_from_u64(202);
        let mut done = 0;
        while done < 200 {
            let a: i64 = rng.gen_range(-1_000_000..=1_000_000);
            let b: i64 = rng.gen_range(-1_000_000..=1_000_000);
            if gcd(a, b) != 1 {
                continue;
            }
            let cert = er(euclid_complete(&z, &zc(a), &zc(b)))?;
            er(cert.verify())?;
            if cert.matrix().row(0) != vec![zc(a), zc(b)] {
                return Err(format!("first row mismatch for ({a}, {b})"));
            }
            let reduced = er(cert.factorization().apply_to_entries(&[zc(a), zc(b)]))?;
            if reduced != e1 {
                return Err(format!("row ({a}, {b}) did not reduce to (1, 0)"));
            }
            done += 1;
        }

        let qx = parse_ring("Q[x]").unwrap();
        let e1p = [qx.one(), qx.zero()];
        for trial in 0..100 {
            // p = q*h + c with c a nonzero constant forces gcd(p, q) to be a unit
            let q = loop {
                let cand = upoly(
                    &qx,
                    &[
                        rng.gen_range(-5..=5),
                        rng.gen_range(-5..=5),
                        rng.gen_range(-5..=5),
                    ],
                );
                if !cand.is_zero() {
                    break cand;
                }
            };
            let h = upoly(
                &qx,
                &[
                    rng.gen_range(-5..=5),
                    rng.gen_range(-5..=5),
                    rng.gen_range(-5..=5),
                ],
            );
            let c = qx.constant(rat_int(rng.gen_range(1..=5)));
            let p = qx.add(&qx.mul(&q, &h).unwrap(), &c).unwrap();
            let (first, second) = if trial % 2 == 0 { (&p, &q) } else { (&q, &p) };
            let cert = er(euclid_complete(&qx, first, second))?;
            er(cert.verify())?;
            if cert.matrix().row(0) != vec![first.clone(), second.clone()] {
                return Err(format!("first row mismatch at polynomial trial {trial}"));
            }
            let reduced =
                er(cert.factorization().apply_to_entries(&[first.clone(), second.clone()]))?;
            if reduced != e1p {
                return Err(format!("polynomial trial {trial} did not reduce to (1, 0)"));
            }
        }

        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 2.0 {
            return Err(format!("took {elapsed:?}, budget is 2 s"));
        }
        Ok(())
    });
}

#[test]
fn criterion_03_vaserstein_isotopy() {
    check("03", "vaserstein isotopy", || {
        let z = RingContext::integers();
        let mut rng = ChaCha8Rng::seed_from_u64(303);
        for trial in 0..50 {
            let (p, q) = loop {
                let p: i64 = rng.gen_range(-40..=40);
                let q: i64 = rng.gen_range(-40..=40);
                if gcd(p, q) == 1 {
                    break (p, q);
                }
            };
            let pair = er(euclid_complete(&z, &zc(p), &zc(q)))?;
            let w = pair.row().witness().to_vec();
            let r: i64 = rng.gen_range(-5..=5);
            let a = vec![zc(p), zc(q), zc(r)];
            let b = vec![w[0].clone(), w[1].clone(), z.zero()];
            // c = b + combination of syzygies of a, so a*c^t stays 1
            let (s1, s2, s3): (i64, i64, i64) = (
                rng.gen_range(-3..=3),
                rng.gen_range(-3..=3),
                rng.gen_range(-3..=3),
            );
            let syz = [
                vec![zc(-q * s1), zc(p * s1), zc(0)],
                vec![zc(-r * s2), zc(0), zc(p * s2)],
                vec![zc(0), zc(-r * s3), zc(q * s3)],
            ];
            let mut c = b.clone();
            for s in &syz {
                for k in 0..3 {
                    c[k] = z.add(&c[k], &s[k]).unwrap();
                }
            }
            let cert = er(vaserstein_isotopy(&z, &a, &b, &c))
                .map_err(|e| format!("integer trial {trial}: {e}"))?;
            er(cert.verify())?;
        }

        let sph = sphere_ring();
        let x = sph.var("x").unwrap();
        let y = sph.var("y").unwrap();
        let zz = sph.var("z").unwrap();
        let a = vec![x.clone(), y.clone(), zz.clone()];
        for trial in 0..50 {
            let b = a.clone();
            let (s1, s2, s3): (i64, i64, i64) = (
                rng.gen_range(-2..=2),
                rng.gen_range(-2..=2),
                rng.gen_range(-2..=2),
            );
            let syz = [
                vec![y.neg().scale(&rat_int(s1)), x.scale(&rat_int(s1)), sph.zero()],
                vec![zz.neg().scale(&rat_int(s2)), sph.zero(), x.scale(&rat_int(s2))],
                vec![sph.zero(), zz.neg().scale(&rat_int(s3)), y.scale(&rat_int(s3))],
            ];
            let mut c = b.clone();
            for s in &syz {
                for k in 0..3 {
                    c[k] = sph.add(&c[k], &s[k]).unwrap();
                }
            }
            let cert = er(vaserstein_isotopy(&sph, &a, &b, &c))
                .map_err(|e| format!("sphere trial {trial}: {e}"))?;
            er(cert.verify())?;
        }
        Ok(())
    });
}

#[test]
fn criterion_04_swan_completion() {
    check("04", "swan completion", || {
        let free = parse_ring("Q[a,b,c,ap,bp,cp]").unwrap();
        let v = |n: &str| free.var(n).unwrap();
        let first = [v("a"), v("b"), v("c")];
        let second = [v("ap"), v("bp"), v("cp")];
        let pairing = {
            let mut acc = free.zero();
            for (f, s) in first.iter().zip(&second) {
                acc = free.add(&acc, &free.mul(f, s).unwrap()).unwrap();
            }
            acc
        };

        // (i) det of the 4x4 product is the square of the pairing
        let alpha = er(swan_product(&free, &first, &second))?;
        let det4 = er(alpha.determinant())?;
        if det4 != free.mul(&pairing, &pairing).unwrap() {
            return Err("4x4 determinant is not the squared pairing".into());
        }

        // (ii) the 3x3 block determinant minus 1 falls in the ideal (pairing - 1)
        let sub_first = [v("a"), v("bp").neg(), v("cp")];
        let sub_second = [
            v("ap"),
            free.sub(&free.mul(&v("a"), &v("cp")).unwrap(), &v("b")).unwrap(),
            free.add(&v("c"), &free.mul(&v("a"), &v("bp")).unwrap()).unwrap(),
        ];
        let sigma = er(swan_product(&free, &sub_first, &sub_second))?;
        let block = |i: usize, j: usize| sigma.entry(i + 1, j + 1).clone();
        let m = er(RingMatrix::from_rows(
            free.clone(),
            vec![
                vec![block(0, 0), block(0, 2), block(0, 1)],
                vec![block(2, 0), block(2, 2), block(2, 1)],
                vec![block(1, 0), block(1, 2), block(1, 1)],
            ],
        ))?;
        let det3 = er(m.determinant())?;
        let shifted = free.sub(&det3, &free.one()).unwrap();
        let generator = free.sub(&pairing, &free.one()).unwrap();
        let (_, remainder) = er(shifted.divmod(&generator, MonomialOrder::DegLex))?;
        if !remainder.is_zero() {
            return Err("det(M) - 1 is not a multiple of (pairing - 1)".into());
        }

        // sphere instance: exact certificate with first row (x^2, y, z)
        let sph = sphere_ring();
        let x = sph.var("x").unwrap();
        let y = sph.var("y").unwrap();
        let z = sph.var("z").unwrap();
        let row = [x.clone(), y.clone(), z.clone()];
        let cert = er(swan_complete(&sph, &row, &row))?;
        er(cert.verify())?;
        let want = vec![sph.mul(&x, &x).unwrap(), y, z];
        if cert.matrix().row(0) != want || cert.row().entries() != want {
            return Err("sphere certificate first row is not (x^2, y, z)".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_05_lifting() {
    check("05", "lifting factorizations", || {
        let z = RingContext::integers();
        let mut rng = ChaCha8Rng::seed_from_u64(505);
        for trial in 0..50 {
            let m = 2 + (trial % 10) as i64;
            let big_m = BigInt::from(m);
            let nops = rng.gen_range(1..=4);
            let mut ops = Vec::new();
            for _ in 0..nops {
                let (i, j) = if rng.gen_bool(0.5) { (1, 2) } else { (2, 1) };
                ops.push(ElementaryOp::new(i, j, zc(rng.gen_range(0..m))).unwrap());
            }
            let fbar = er(ElementaryFactorization::new(z.clone(), 2, ops))?;
            let lifted = er(lift_factorization_mod(&fbar, &big_m))?;
            // reduce op-by-op: residue entries lift to themselves
            if lifted.ops() != fbar.ops() {
                return Err(format!("modular trial {trial}: lift changed the ops"));
            }
            let (p, q) = loop {
                let p: i64 = rng.gen_range(-30..=30);
                let q: i64 = rng.gen_range(-30..=30);
                if gcd(p, q) == 1 {
                    break (p, q);
                }
            };
            let base = er(euclid_complete(&z, &zc(p), &zc(q)))?.row().clone();
            let (moved, lifted) = er(transform_row_with_lift_mod(&base, &fbar, &big_m))?;
            let downstairs = er(fbar.apply_to_entries(&er(reduce_row_mod(base.entries(), &big_m))?))?;
            if er(reduce_row_mod(moved.entries(), &big_m))?
                != er(reduce_row_mod(&downstairs, &big_m))?
            {
                return Err(format!("modular trial {trial}: reduction does not commute"));
            }
            if lifted.ops().len() != fbar.ops().len() {
                return Err(format!("modular trial {trial}: op count changed"));
            }
        }

        let circle = circle_ring();
        let upstairs = parse_ring("Q[x,y]").unwrap();
        let lambdas = ["1", "-1", "x", "y", "x*y", "x+y", "2", "y^2"];
        let hs = ["y", "x+1", "x*y-2", "y^2", "3"];
        for trial in 0..50 {
            let nops = rng.gen_range(1..=3);
            let mut ops = Vec::new();
            for _ in 0..nops {
                let (i, j) = if rng.gen_bool(0.5) { (1, 2) } else { (2, 1) };
                let lambda = circle.parse(lambdas[rng.gen_range(0..lambdas.len())]).unwrap();
                ops.push(ElementaryOp::new(i, j, lambda).unwrap());
            }
            let fbar = er(ElementaryFactorization::new(circle.clone(), 2, ops))?;
            let lifted = er(lift_factorization(&fbar, &upstairs))?;
            let back = er(reduce_factorization(&lifted, &circle))?;
            if back.ops() != fbar.ops() {
                return Err(format!("circle trial {trial}: lift-reduce changed the ops"));
            }
            // an upstairs row (1 - x*h, x) with witness (1, h) stays unimodular
            let h = upstairs.parse(hs[rng.gen_range(0..hs.len())]).unwrap();
            let x = upstairs.var("x").unwrap();
            let base = er(UnimodularRow::new(
                upstairs.clone(),
                vec![
                    upstairs.sub(&upstairs.one(), &upstairs.mul(&x, &h).unwrap()).unwrap(),
                    x.clone(),
                ],
                vec![upstairs.one(), h],
            ))?;
            let (moved, _) = er(transform_row_with_lift(&base, &fbar))?;
            let downstairs =
                er(fbar.apply_to_entries(&er(reduce_row_to_quotient(base.entries(), &circle))?))?;
            if er(reduce_row_to_quotient(moved.entries(), &circle))? != downstairs {
                return Err(format!("circle trial {trial}: reduction does not commute"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_06_skew_form_covariance() {
    check("06", "skew form covariance", || {
        let ring = parse_ring("Q[a1,a2,a3,b1,b2,b3,l]").unwrap();
        let a: Vec<Polynomial> = (1..=3).map(|k| ring.var(&format!("a{k}")).unwrap()).collect();
        let b: Vec<Polynomial> = (1..=3).map(|k| ring.var(&format!("b{k}")).unwrap()).collect();
        let l = ring.var("l").unwrap();

        let v = er(skew_matrix(&ring, &a, &b))?;
        let pairing = {
            let mut acc = ring.zero();
            for (f, s) in a.iter().zip(&b) {
                acc = ring.add(&acc, &ring.mul(f, s).unwrap()).unwrap();
            }
            acc
        };
        if er(v.determinant())? != ring.mul(&pairing, &pairing).unwrap() {
            return Err("det V(a,b) is not the squared pairing".into());
        }

        for (i, j) in [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)] {
            let shear = er(ElementaryFactorization::new(
                ring.clone(),
                3,
                vec![ElementaryOp::new(i, j, l.clone()).unwrap()],
            ))?;
            let conjugated = er(conjugate_skew(&v, &shear))?;
            let moved_a = er(shear.apply_to_entries(&a))?;
            let transport = er(ElementaryFactorization::new(
                ring.clone(),
                3,
                vec![ElementaryOp::new(j, i, l.neg()).unwrap()],
            ))?;
            let moved_b = er(transport.apply_to_entries(&b))?;
            let expected = er(skew_matrix(&ring, &moved_a, &moved_b))?;
            if conjugated != expected {
                return Err(format!("covariance fails for generator ({i}, {j})"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_07_winding_obstruction() {
    check("07", "winding obstruction", || {
        let circle = circle_ring();
        let x = circle.var("x").unwrap();
        let y = circle.var("y").unwrap();

        let base = [x.clone(), y.clone()];
        let report = er(winding_of_row_map(&base, &circle_sample(360)))?;
        if report.winding != 1 || report.residual >= 1e-6 {
            return Err(format!(
                "identity trace: winding {}, residual {:e}",
                report.winding, report.residual
            ));
        }

        let constant = [circle.one(), circle.zero()];
        let flat = er(winding_of_row_map(&constant, &circle_sample(360)))?;
        if flat.winding != 0 {
            return Err(format!("constant trace has winding {}", flat.winding));
        }

        let squared = [
            circle.parse("x^2-y^2").unwrap(),
            circle.parse("2*x*y").unwrap(),
        ];
        let doubled = er(winding_of_row_map(&squared, &circle_sample(720)))?;
        if doubled.winding != 2 {
            return Err(format!("squared loop has winding {}", doubled.winding));
        }

        let sample = circle_sample(2880);
        let mut rng = ChaCha8Rng::seed_from_u64(707);
        for trial in 0..100 {
            let nops = rng.gen_range(1..=3);
            let mut ops = Vec::new();
            for _ in 0..nops {
                let (i, j) = if rng.gen_bool(0.5) { (1, 2) } else { (2, 1) };
                ops.push(ElementaryOp::new(i, j, zc_in(&circle, rng.gen_range(-1..=1))).unwrap());
            }
            let f = er(ElementaryFactorization::new(circle.clone(), 2, ops))?;
            let (before, after) = er(winding_after_factorization(&base, &f, &sample))?;
            if before.winding != after.winding {
                return Err(format!(
                    "trial {trial}: winding changed {} -> {}",
                    before.winding, after.winding
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_08_reflection_rotation_numerics() {
    check("08", "reflection and rotation numerics", || {
        let mut rng = ChaCha8Rng::seed_from_u64(808);
        let tol = 1e-9;
        for trial in 0..1000 {
            let dim = 2 + (trial % 3);
            let v0 = random_unit(&mut rng, dim);
            let v1 = loop {
                let cand = random_unit(&mut rng, dim);
                if 1.0 + dotf(&v0, &cand) > 1e-3 {
                    break cand;
                }
            };

            // reflection: involution and fixed hyperplane
            let twice = er(reflection(&v0, &er(reflection(&v0, &v1))?))?;
            if twice.iter().zip(&v1).any(|(p, q)| (p - q).abs() > tol) {
                return Err(format!("trial {trial}: reflection is not an involution"));
            }
            let proj = dotf(&v1, &v0);
            let tangent: Vec<f64> = v1.iter().zip(&v0).map(|(p, q)| p - proj * q).collect();
            let fixed = er(reflection(&v0, &tangent))?;
            if fixed.iter().zip(&tangent).any(|(p, q)| (p - q).abs() > tol) {
                return Err(format!("trial {trial}: hyperplane is not fixed"));
            }
            let rm = er(reflection_matrix(&v0))?;
            if (float_det(&rm) + 1.0).abs() > tol {
                return Err(format!("trial {trial}: reflection determinant is not -1"));
            }

            // rotation: maps v0 to v1 and is orthogonal
            let alpha = er(rotation_between(&v0, &v1))?;
            let image = mat_vec(&alpha, &v0);
            if image.iter().zip(&v1).any(|(p, q)| (p - q).abs() > tol) {
                return Err(format!("trial {trial}: rotation misses the target"));
            }
            for i in 0..dim {
                for j in 0..dim {
                    let col_i: Vec<f64> = (0..dim).map(|k| alpha[k][i]).collect();
                    let col_j: Vec<f64> = (0..dim).map(|k| alpha[k][j]).collect();
                    let want = if i == j { 1.0 } else { 0.0 };
                    if (dotf(&col_i, &col_j) - want).abs() > tol {
                        return Err(format!("trial {trial}: rotation is not orthogonal"));
                    }
                }
            }

            // midpoint witness pairs to 1 with both endpoints
            let w = er(vaserstein_midpoint(&v0, &v1))?;
            if (dotf(&w, &v0) - 1.0).abs() > tol || (dotf(&w, &v1) - 1.0).abs() > tol {
                return Err(format!("trial {trial}: midpoint identities fail"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_09_homotopy_nonvanishing() {
    check("09", "homotopy nonvanishing", || {
        let mut rng = ChaCha8Rng::seed_from_u64(909);

        let circle = circle_ring();
        let circle_pts = circle_sample(64);
        let circle_row = [circle.var("x").unwrap(), circle.var("y").unwrap()];
        let circle_lambdas = ["1", "-1", "x", "y"];

        let sph = sphere_ring();
        let sphere_pts = sample_variety(
            &sph,
            &SampleGenerator::Sphere {
                bands: 6,
                samples: 12,
            },
            MEMBERSHIP_TOL,
        )
        .unwrap();
        let sphere_row = [
            sph.var("x").unwrap(),
            sph.var("y").unwrap(),
            sph.var("z").unwrap(),
        ];
        let sphere_lambdas = ["1", "-1", "x", "z"];

        let run = |ctx: &RingContext,
                       n: usize,
                       row: &[Polynomial],
                       pts: &VarietySample,
                       lambdas: &[&str],
                       rng: &mut ChaCha8Rng|
         -> Result<(), String> {
            for trial in 0..25 {
                let nops = rng.gen_range(1..=2);
                let mut ops = Vec::new();
                for _ in 0..nops {
                    let (i, j) = loop {
                        let i = rng.gen_range(1..=n);
                        let j = rng.gen_range(1..=n);
                        if i != j {
                            break (i, j);
                        }
                    };
                    let lambda = ctx.parse(lambdas[rng.gen_range(0..lambdas.len())]).unwrap();
                    ops.push(ElementaryOp::new(i, j, lambda).unwrap());
                }
                let f = er(ElementaryFactorization::new(ctx.clone(), n, ops))?;
                let (param, path) = er(f.path("t"))?;
                let ext = path.ctx().clone();
                let t_idx = ext.vars().iter().position(|v| v == &param).unwrap();
                let embedded: Vec<Polynomial> =
                    row.iter().map(|e| ext.embed(e).unwrap()).collect();
                let moved = er(path.apply_to_entries(&embedded))?;
                let compiled: Vec<_> = moved.iter().map(Polynomial::compile).collect();
                let mut min_norm = f64::INFINITY;
                for step in 0..=100 {
                    let t = step as f64 / 100.0;
                    for p in pts.points() {
                        let mut point = p.clone();
                        debug_assert_eq!(t_idx, point.len());
                        point.push(t);
                        let value: Vec<f64> = compiled.iter().map(|c| c.eval(&point)).collect();
                        min_norm = min_norm.min(normf(&value));
                    }
                }
                if min_norm <= 1e-9 {
                    return Err(format!(
                        "trial {trial}: path trace reached norm {min_norm:e}"
                    ));
                }
            }
            Ok(())
        };

        run(&circle, 2, &circle_row, &circle_pts, &circle_lambdas, &mut rng)?;
        run(&sph, 3, &sphere_row, &sphere_pts, &sphere_lambdas, &mut rng)?;

        // the detector is not vacuous: f and -f fail the straight-line check
        let trace = er(eval_row_map(&circle_row, &circle_pts))?;
        let report = er(antipodal_obstruction(&trace, 100))?;
        if report.admissible {
            return Err("antipodal pair passed the homotopy check".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_10_quaternion_matrices() {
    check("10", "quaternion matrices", || {
        let ring = parse_ring("Q[x2,x3,x4]").unwrap();
        let pure = [
            ring.zero(),
            ring.var("x2").unwrap(),
            ring.var("x3").unwrap(),
            ring.var("x4").unwrap(),
        ];
        let m = er(quaternion_left_matrix(&ring, &pure))?;
        if !m.is_skew_symmetric() {
            return Err("pure quaternion matrix is not skew-symmetric".into());
        }
        let norm_sq = {
            let mut acc = ring.zero();
            for f in &pure[1..] {
                acc = ring.add(&acc, &ring.mul(f, f).unwrap()).unwrap();
            }
            acc
        };
        if er(m.determinant())? != ring.mul(&norm_sq, &norm_sq).unwrap() {
            return Err("determinant is not the squared norm".into());
        }
        Ok(())
    });
}
