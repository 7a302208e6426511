use hallfrob::flags::{enum_flags, relative_position, ThetaMatrix};
use hallfrob::gfq::{field_of_order, FqElem, FqField, FqMatrix};
use hallfrob::qschur::{enum_theta, SchurElt};
use num_bigint::BigInt;
use proptest::prelude::*;

const ORDERS: [u64; 7] = [2, 3, 4, 5, 8, 9, 25];

fn elem(f: &FqField, k: u64) -> FqElem {
    f.elements().nth((k % f.order()) as usize).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(q in prop::sample::select(ORDERS.to_vec()), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field_of_order(q, 64).unwrap();
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.from_int(0));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.from_int(1));
        }
        // Frobenius is additive
        let p = f.p();
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }

    // The relative position of (G, F) is the transpose of that of (F, G),
    // and both are unchanged by a common change of basis.
    #[test]
    fn relative_position_symmetries(seed in any::<u64>(), q in prop::sample::select(vec![2u64, 3])) {
        let f = field_of_order(q, 64).unwrap();
        let flags = enum_flags(&f, &[1, 2]);
        let others = enum_flags(&f, &[2, 1]);
        let x = &flags[(seed % flags.len() as u64) as usize];
        let y = &others[((seed >> 20) % others.len() as u64) as usize];
        let a = relative_position(x, y).unwrap();
        prop_assert_eq!(relative_position(y, x).unwrap(), a.transpose());
        let data: Vec<FqElem> = (0..9u64).map(|k| elem(&f, seed.rotate_left(k as u32 * 7) ^ k)).collect();
        let m = FqMatrix::from_rows(&f, 3, 3, data);
        let g = if m.inverse().is_some() { m } else { FqMatrix::identity(&f, 3) };
        let a2 = relative_position(&x.image(&g).unwrap(), &y.image(&g).unwrap()).unwrap();
        prop_assert_eq!(a2, a);
    }
}

#[test]
fn multiplicative_groups_are_cyclic() {
    for q in ORDERS {
        let f = field_of_order(q, 64).unwrap();
        let orders: Vec<u64> = f.nonzero().map(|x| f.mult_order(x).unwrap()).collect();
        assert_eq!(orders.len() as u64, q - 1);
        assert!(orders.iter().all(|o| (q - 1) % o == 0));
        assert_eq!(orders.iter().max(), Some(&(q - 1)), "q = {q}");
        assert_eq!(f.mult_order(f.primitive()), Some(q - 1));
    }
}

#[test]
fn schur_algebra_is_associative_with_unit() {
    for q in [2u64, 3] {
        let basis = enum_theta(2, 2);
        let unit = SchurElt::unit(2, 2, q);
        for a in &basis {
            let ea = SchurElt::basis(a, q);
            assert_eq!(unit.multiply(&ea, 64).unwrap(), ea);
            assert_eq!(ea.multiply(&unit, 64).unwrap(), ea);
            for b in &basis {
                let eb = SchurElt::basis(b, q);
                let ab = ea.multiply(&eb, 64).unwrap();
                for c in &basis {
                    let ec = SchurElt::basis(c, q);
                    let left = ab.multiply(&ec, 64).unwrap();
                    let right = ea.multiply(&eb.multiply(&ec, 64).unwrap(), 64).unwrap();
                    assert_eq!(left, right, "{a:?} {b:?} {c:?} at q = {q}");
                }
            }
        }
    }
}

#[test]
fn orbit_sizes_add_up() {
    // pairs of complete flags in F_q^2 split into q + 1 diagonal pairs and
    // q (q + 1) pairs in general position
    for q in [2u64, 3, 4] {
        let f = field_of_order(q, 64).unwrap();
        let flags = enum_flags(&f, &[1, 1]);
        let mut diag = 0u64;
        let mut general = 0u64;
        for x in &flags {
            for y in &flags {
                let a = relative_position(x, y).unwrap();
                if a == ThetaMatrix::diag(&[1, 1]) {
                    diag += 1;
                } else {
                    assert_eq!(a, ThetaMatrix::from_rows(&[&[0, 1], &[1, 0]]));
                    general += 1;
                }
            }
        }
        assert_eq!((diag, general), (q + 1, q * (q + 1)));
        let s = SchurElt::basis(&ThetaMatrix::from_rows(&[&[0, 1], &[1, 0]]), q);
        // T_s^2 = (q - 1) T_s + q
        let sq = s.multiply(&s, 64).unwrap();
        assert_eq!(sq.coeff(&ThetaMatrix::from_rows(&[&[0, 1], &[1, 0]])), BigInt::from(q - 1));
        assert_eq!(sq.coeff(&ThetaMatrix::diag(&[1, 1])), BigInt::from(q));
    }
}
