use num_bigint::BigInt;
use num_traits::Zero;
use obgenus::braid::{connected_sum_braid, BraidWord};
use obgenus::classify::{
    classify_dbc, classify_dbc_3braid, classify_open_book, classify_pants, obg_eval, obg_eval_with_book,
    pants_heegaard_presentation, seifert_from_pants, ManifoldClass, ManifoldKind,
};
use obgenus::exactalg::{cokernel, AbelianGroup, GroupOrder, IntMatrix};
use obgenus::mcg::{birman_hilden_lift, PantsMonodromy};
use obgenus::openbook::{dbc_obg_bound, dbc_open_book, AnnulusPlumbing, OpenBook, PageType};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn triples(lo: i64, hi: i64) -> impl Iterator<Item = PantsMonodromy> {
    (lo..=hi).flat_map(move |a| (lo..=hi).flat_map(move |b| (lo..=hi).map(move |c| PantsMonodromy::new(a, b, c))))
}

fn random_page(rng: &mut ChaCha8Rng) -> PageType {
    PageType::new(rng.gen_range(0..4), rng.gen_range(1..5)).unwrap()
}

#[test]
fn plumbing_adds_genera() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b9);
    for _ in 0..100 {
        let x = OpenBook::opaque(random_page(&mut rng));
        let y = OpenBook::opaque(random_page(&mut rng));
        for model in [AnnulusPlumbing::HopfBand, AnnulusPlumbing::Pants] {
            let z = x.plumb_with(&y, model);
            assert_eq!(z.euler_characteristic(), x.euler_characteristic() + y.euler_characteristic() - 1);
            assert_eq!(z.induced_heegaard_genus(), x.induced_heegaard_genus() + y.induced_heegaard_genus());
            assert_eq!(z.obg_upper_bound(), x.obg_upper_bound() + y.obg_upper_bound());
        }
    }
}

#[test]
fn dbc_pages() {
    for k in 1..=8usize {
        let w = BraidWord::identity(k).unwrap();
        let ob = dbc_open_book(&w);
        assert_eq!(ob.euler_characteristic(), 2 - k as i64);
        assert_eq!(dbc_obg_bound(&w), ob.induced_heegaard_genus());
        let page = ob.page();
        if k % 2 == 1 {
            assert_eq!((page.genus(), page.boundary_components()), ((k as u32 - 1) / 2, 1));
        } else {
            assert_eq!((page.genus(), page.boundary_components()), ((k as u32 - 2) / 2, 2));
        }
    }
}

fn b3_word() -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(prop::sample::select(vec![1i64, -1, 2, -2]), 0..=30)
        .prop_map(|l| BraidWord::new(3, l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn torus_page_homology_matches_determinant(w in b3_word()) {
        let ob = OpenBook::punctured_torus(birman_hilden_lift(&w).unwrap());
        let h = ob.h1_connected_binding().unwrap();
        let det = w.closure_determinant().unwrap();
        match h.order() {
            GroupOrder::Finite(n) => prop_assert_eq!(n, det),
            GroupOrder::Infinite => prop_assert!(det.is_zero()),
        }
        prop_assert_eq!(&classify_dbc_3braid(&w).unwrap().h1, &h);
        prop_assert_eq!(&classify_open_book(&dbc_open_book(&w)).unwrap().h1, &h);
        let bound = dbc_obg_bound(&w);
        let class = classify_dbc(&w).unwrap();
        let r = obg_eval_with_book(&class, &dbc_open_book(&w));
        prop_assert!(r.upper.unwrap() <= bound);
        prop_assert!(r.exact.is_none_or(|e| e <= bound));
    }
}

#[test]
fn permutation_symmetry() {
    for m in triples(-4, 4) {
        let c = classify_pants(&m);
        for perm in PERMS {
            assert_eq!(classify_pants(&m.permuted(perm)), c, "{m} permuted by {perm:?}");
        }
    }
}

#[test]
fn seifert_homology_order() {
    for m in triples(-4, 4).filter(|m| m.zero_count() == 0) {
        let [a, b, c] = m.exponents();
        let form = (a * b + b * c + c * a).abs();
        let h = seifert_from_pants(&m).unwrap().h1();
        if form == 0 {
            assert_eq!(h.free_rank(), 1, "{m}");
        } else {
            assert_eq!(h.order(), GroupOrder::Finite(BigInt::from(form)), "{m}");
        }
        assert!(classify_pants(&m).is_prime());
    }
}

#[test]
fn vanishing_exponent_homology() {
    for p in -5i64..=5 {
        for q in -5i64..=5 {
            let diag = IntMatrix::diagonal(&[BigInt::from(p), BigInt::from(q)]);
            assert_eq!(classify_pants(&PantsMonodromy::new(p, q, 0)).h1, cokernel(&diag), "({p},{q})");
        }
    }
}

#[test]
fn mirror_preserves_homology_and_shape() {
    for m in triples(-4, 4) {
        let c = classify_pants(&m);
        let d = classify_pants(&-m);
        assert_eq!(c.h1, d.h1, "{m}");
        assert_eq!(c.is_prime(), d.is_prime(), "{m}");
        assert_eq!(c.kind.type_name(), d.kind.type_name(), "{m}");
    }
}

#[test]
fn braid_and_pants_pipelines_agree() {
    for p in -5i64..=5 {
        for q in -5i64..=5 {
            let from_braid = classify_dbc_3braid(&connected_sum_braid(p, q)).unwrap();
            let from_pants = classify_pants(&PantsMonodromy::new(p, q, 0));
            assert_eq!(from_braid.h1, from_pants.h1, "({p},{q})");
            assert_eq!(from_braid.kind, from_pants.kind, "({p},{q})");
        }
    }
}

#[test]
fn heegaard_presentation_gives_the_same_homology() {
    for m in triples(-4, 4) {
        assert_eq!(pants_heegaard_presentation(&m).abelianization(), classify_pants(&m).h1, "{m}");
    }
}

#[test]
fn obg_is_consistent_with_books() {
    for m in triples(-4, 4) {
        let c = classify_pants(&m);
        let book = OpenBook::pants(m);
        let free = obg_eval(&c);
        let with_book = obg_eval_with_book(&c, &book);
        assert!(with_book.upper.unwrap() <= book.obg_upper_bound());
        assert!(with_book.exact.is_none_or(|e| e <= book.obg_upper_bound()));
        assert_eq!(free.lower, with_book.lower);
        if let Some(e) = free.exact {
            assert_eq!(with_book.exact, Some(e), "{m}");
        }
        // every pants book lands in genus at most 2
        assert!(with_book.exact.is_some(), "{m}: {with_book:?}");
        if let ManifoldKind::ConnectedSum(parts) = &c.kind {
            assert_eq!(parts.len(), 2);
            assert_eq!(free.exact, Some(2), "{m}");
        }
    }
    let s3 = ManifoldClass::from_kind(ManifoldKind::S3).unwrap();
    assert_eq!(obg_eval(&s3).exact, Some(0));
    assert_eq!(obg_eval(&s3).upper, Some(0));
    assert_eq!(AbelianGroup::trivial(), s3.h1);
}
