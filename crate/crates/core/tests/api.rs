use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use seshadri::nslattice::self_intersection;
use seshadri::sampling::random_ample;
use seshadri::scalar::parse_ratio;
use seshadri::{cm, crosssection, nocm, oracle, BigInt, NsClass, Rational, SurfaceKind};

const KINDS: [(SurfaceKind, i64); 3] =
    [(SurfaceKind::NoCm, 40), (SurfaceKind::CmGaussian, 6), (SurfaceKind::CmEisenstein, 6)];

fn epsilon(l: &NsClass) -> BigInt {
    if l.surface().is_cm() {
        cm::epsilon_cm(l).unwrap().epsilon
    } else {
        nocm::epsilon(l).unwrap().epsilon
    }
}

#[test]
fn machine_and_big_integers_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (kind, bound) in KINDS {
        for _ in 0..40 {
            let l: seshadri::nslattice::NsClass<i64> = random_ample(&mut rng, kind, bound);
            let big = NsClass::new(kind, l.coeffs().iter().map(|&c| BigInt::from(c)).collect()).unwrap();
            let small = if kind.is_cm() { cm::epsilon_cm(&l).unwrap().epsilon } else { nocm::epsilon(&l).unwrap().epsilon };
            assert_eq!(BigInt::from(small), epsilon(&big), "{big}");
        }
    }
}

#[test]
fn scaling_and_the_volume_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (kind, bound) in KINDS {
        for _ in 0..30 {
            let l: NsClass = random_ample(&mut rng, kind, bound);
            let e = epsilon(&l);
            assert!(&e * &e <= self_intersection(&l), "{l}");
            let three = BigInt::from(3);
            assert_eq!(epsilon(&l.scaled(&three)), e * three, "{l}");
        }
    }
}

#[test]
fn theorems_match_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (kind, bound) in KINDS {
        for _ in 0..30 {
            let l: NsClass = random_ample(&mut rng, kind, bound);
            let brute = if kind.is_cm() { oracle::brute_epsilon_cm(&l) } else { oracle::brute_epsilon_nocm(&l) };
            assert_eq!(epsilon(&l), brute.unwrap(), "{l}");
        }
    }
}

#[test]
fn cross_section_agrees_with_epsilon_on_integral_points() {
    let lambda: Rational = parse_ratio("1/3").unwrap();
    let f = crosssection::cross_section(&lambda).unwrap();
    // 3·L_{1/3,μ} = 3F1 + F2 − 3μΔ is integral for μ = k/3
    for k in -6..1 {
        let mu = Rational::new(k.into(), 3.into());
        let l = NsClass::from_i64(SurfaceKind::NoCm, &[3, 1, -k]).unwrap();
        assert_eq!(f.evaluate(&mu).unwrap() * Rational::from_integer(3.into()), Rational::from_integer(epsilon(&l)));
    }
}

#[test]
fn errors_are_reported() {
    assert!(NsClass::from_i64(SurfaceKind::NoCm, &[1, 2]).is_err());
    let not_ample = NsClass::from_i64(SurfaceKind::NoCm, &[1, 0, 0]).unwrap();
    assert!(nocm::epsilon(&not_ample).is_err());
    let gaussian = NsClass::from_i64(SurfaceKind::CmGaussian, &[1, 1, 1, 1]).unwrap();
    assert!(nocm::epsilon(&gaussian).is_err());
    assert!(crosssection::cross_section(&parse_ratio::<BigInt>("3/2").unwrap()).is_err());
}
