//! Random descriptors and brute-force oracles shared by integration tests.
#![allow(dead_code)]

use nipval::fields::{AbstractField, FieldDesc, ImpDegree};
use nipval::oag::{ArchSummand, GroupElement, OAGDesc, Rat};
use nipval::tri::Tri;
use nipval::valfield::{AbstractCore, Core, CoreFlags, Lower, ValuedFieldDesc};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use std::cmp::Ordering;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn random_tri(rng: &mut StdRng) -> Tri {
    *[Tri::True, Tri::False, Tri::Unknown].choose(rng).unwrap()
}

pub fn random_summand(rng: &mut StdRng) -> ArchSummand {
    match rng.gen_range(0..5) {
        0 | 1 => ArchSummand::integers(),
        2 => ArchSummand::rationals(),
        3 => ArchSummand::localized([*PRIMES.choose(rng).unwrap()]).unwrap(),
        _ => {
            let mut ps: Vec<u64> = PRIMES.choose_multiple(rng, 2).copied().collect();
            ps.sort();
            ArchSummand::localized(ps).unwrap()
        }
    }
}

pub fn random_group(rng: &mut StdRng, max_rank: usize) -> OAGDesc {
    let n = rng.gen_range(1..=max_rank);
    OAGDesc::new((0..n).map(|_| random_summand(rng)).collect())
}

/// A small member of the summand.
pub fn random_member(rng: &mut StdRng, a: &ArchSummand) -> Rat {
    loop {
        let d = *[1i64, 1, 2, 3, 4, 5, 7, 9].choose(rng).unwrap();
        let r = rat(rng.gen_range(-4..=4), d);
        if a.contains(&r) {
            return r;
        }
    }
}

pub fn random_positive(rng: &mut StdRng, g: &OAGDesc) -> GroupElement {
    let lead = rng.gen_range(0..g.rank());
    let coords = g
        .summands()
        .iter()
        .enumerate()
        .map(|(i, a)| match i.cmp(&lead) {
            Ordering::Less => Rat::zero(),
            Ordering::Equal => loop {
                let r = random_member(rng, a);
                if r.is_positive() {
                    break r;
                }
            },
            Ordering::Greater => random_member(rng, a),
        })
        .collect();
    GroupElement::from_coords(coords)
}

fn random_imp(rng: &mut StdRng) -> Option<ImpDegree> {
    match rng.gen_range(0..5) {
        0 => None,
        1 => Some(ImpDegree::Finite(0)),
        2 => Some(ImpDegree::Finite(1)),
        3 => Some(ImpDegree::Finite(2)),
        _ => Some(ImpDegree::Infinite),
    }
}

/// A valid field of the given characteristic.
pub fn random_field_of_char(rng: &mut StdRng, char: u64) -> FieldDesc {
    loop {
        let k = match (char, rng.gen_range(0..5)) {
            (0, 0) => FieldDesc::acf0(),
            (0, 1) => FieldDesc::RealClosed,
            (p, 0) if p > 0 => FieldDesc::Finite { p, n: rng.gen_range(1..=2) },
            (p, 1) if p > 0 => FieldDesc::falg(p),
            (p, 2) if p > 0 => FieldDesc::SepClosed {
                p,
                e: random_imp(rng).unwrap_or(ImpDegree::Finite(1)),
            },
            (c, _) => FieldDesc::Abstract(AbstractField {
                char: c,
                perfect: random_tri(rng),
                imperfection: random_imp(rng),
                no_sep_ext_div_p: random_tri(rng),
                nip: random_tri(rng),
            }),
        };
        if let Ok(k) = k.validate() {
            return k;
        }
    }
}

pub fn random_field(rng: &mut StdRng) -> FieldDesc {
    let c = *[0, 2, 3, 5, 7].choose(rng).unwrap();
    random_field_of_char(rng, c)
}

fn random_flags(rng: &mut StdRng) -> CoreFlags {
    CoreFlags {
        henselian: random_tri(rng),
        defectless: random_tri(rng),
        sep_defectless: random_tri(rng),
        alg_maximal: random_tri(rng),
        sep_alg_maximal: random_tri(rng),
    }
}

/// A valued field of equal characteristic `p`, used below Cohen cores.
fn random_char_p_lower(rng: &mut StdRng, p: u64) -> Option<ValuedFieldDesc> {
    let d = match rng.gen_range(0..2) {
        0 => ValuedFieldDesc::trivial(random_field_of_char(rng, p)).ok()?,
        _ => ValuedFieldDesc::abstract_core(AbstractCore {
            residue: random_field_of_char(rng, p),
            group: random_group(rng, 2),
            vp: None,
            field: rng.gen_bool(0.5).then(|| FieldDesc::SepClosed {
                p,
                e: ImpDegree::Finite(rng.gen_range(1..=2)),
            }),
            flags: random_flags(rng),
        })
        .ok()?,
    };
    Some(if rng.gen_bool(0.4) { d.hahn(random_group(rng, 2)) } else { d })
}

fn random_core(rng: &mut StdRng) -> Option<Core> {
    let p = *PRIMES.choose(rng).unwrap();
    Some(match rng.gen_range(0..7) {
        0 => Core::Trivial(random_field(rng)),
        1 => Core::QpExt {
            p,
            e: rng.gen_range(1..=3),
            f: rng.gen_range(1..=3),
        },
        2 => Core::Cohen(Lower::Plain(random_field_of_char(rng, p))),
        3 => Core::Cohen(Lower::Valued(Box::new(random_char_p_lower(rng, p)?))),
        4 => {
            let residue = if rng.gen_bool(0.6) {
                FieldDesc::falg(p)
            } else {
                random_field_of_char(rng, p)
            };
            let group = random_group(rng, 2);
            let vp = random_positive(rng, &group);
            Core::TameKaplansky { residue, group, vp }
        }
        _ => {
            let residue = random_field(rng);
            let group = if rng.gen_bool(0.1) {
                OAGDesc::trivial()
            } else {
                random_group(rng, 3)
            };
            let vp = (residue.char() > 0 && !group.is_trivial() && rng.gen_bool(0.5))
                .then(|| random_positive(rng, &group));
            Core::Abstract(AbstractCore {
                residue,
                group,
                vp,
                field: None,
                flags: random_flags(rng),
            })
        }
    })
}

/// A random valid descriptor with up to two Hahn layers.
pub fn random_descriptor(rng: &mut StdRng) -> ValuedFieldDesc {
    loop {
        let Some(core) = random_core(rng) else { continue };
        let Ok(mut d) = ValuedFieldDesc::build(vec![], core) else { continue };
        for _ in 0..rng.gen_range(0..=2) {
            d = d.hahn(random_group(rng, 2));
        }
        return d;
    }
}

/// Every member of the summand with numerator at most `bound·d` in absolute
/// value over each admissible denominator `d <= bound`.
pub fn summand_grid(a: &ArchSummand, bound: i64) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    for d in 1..=bound {
        if !a.contains(&rat(1, d)) {
            continue;
        }
        for k in -bound * d..=bound * d {
            let r = rat(k, d);
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

/// All elements of the product of per-summand grids.
pub fn group_grid(g: &OAGDesc, bound: i64) -> Vec<GroupElement> {
    let mut acc: Vec<Vec<Rat>> = vec![vec![]];
    for a in g.summands() {
        let col = summand_grid(a, bound);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                col.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c.clone());
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(GroupElement::from_coords).collect()
}

/// `[-γ, γ] ⊆ pΓ`, checked on a grid.
pub fn brute_rough_p_divisible(g: &OAGDesc, gamma: &GroupElement, p: u64, bound: i64) -> bool {
    let neg = gamma.neg();
    let inv_p = Rat::new(BigInt::one(), BigInt::from(p));
    group_grid(g, bound)
        .into_iter()
        .filter(|x| x >= &neg && x <= gamma)
        .all(|x| g.contains(&x.scale(&inv_p)))
}

/// Size of `[0, γ]` on the grid of the given bound.
pub fn brute_interval_count(g: &OAGDesc, gamma: &GroupElement, bound: i64) -> usize {
    let zero = g.zero();
    group_grid(g, bound)
        .into_iter()
        .filter(|x| x >= &zero && x <= gamma)
        .count()
}

/// Coefficients of `(1 + t)^{1/2}` as exact rationals: `binom(1/2, k)`.
pub fn binomial_half(n: usize) -> Vec<Rat> {
    let half = rat(1, 2);
    let mut out = vec![Rat::one()];
    let mut c = Rat::one();
    for k in 0..n {
        c = c * (&half - Rat::from_integer(BigInt::from(k))) / Rat::from_integer(BigInt::from(k + 1));
        out.push(c.clone());
    }
    out
}

/// `r mod p` for `r` with denominator prime to `p`.
pub fn reduce_mod(r: &Rat, p: u64) -> u64 {
    let p = p as i64;
    let m = |x: &BigInt| -> i64 {
        let v: i64 = (x % BigInt::from(p)).try_into().unwrap();
        v.rem_euclid(p)
    };
    let (n, d) = (m(r.numer()), m(r.denom()));
    let inv = (1..p).find(|i| (d * i) % p == 1).expect("denominator prime to p");
    ((n * inv) % p) as u64
}
