mod common;

use proptest::prelude::*;
use revsense::bwt::{bbwt, bwt, bwt_sentinel};
use revsense::complexity::{right_extension_count, substring_complexity};
use revsense::format::{parse_text, write_ascii, write_tokens};
use revsense::harness::{sensitivity_report, SensitivityReport};
use revsense::lex::lex_parse;
use revsense::lyndon::{is_lyndon, lyndon_factorize};
use revsense::lz::{lz_end_greedy, lz_end_optimal, lz_no_overlap, lz_parse};
use revsense::measures::{MeasureId, MeasureOptions};
use revsense::rle::rle;
use revsense::suffix::{build_suffix_context, cyclic_rotation_order};
use revsense::text::{reverse, rotate, Text};
use revsense::Rational;

fn word(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop_oneof![Just(2u32), Just(3u32), Just(5u32)]
        .prop_flat_map(move |sigma| prop::collection::vec(0..sigma, 1..=max_len))
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn suffix_structures_match_oracle(s in word(48)) {
        let ctx = build_suffix_context(&common::text(&s)).unwrap();
        let sa = common::suffix_array(&s);
        prop_assert_eq!(&ctx.sa, &sa);
        prop_assert_eq!(&ctx.lcp, &common::lcp_array(&s, &sa));
        for (r, &i) in ctx.sa.iter().enumerate() {
            prop_assert_eq!(ctx.isa[i], r);
        }
        prop_assert_eq!(cyclic_rotation_order(&common::text(&s)).unwrap(), common::rotation_order(&s));
    }

    #[test]
    fn transforms_match_oracle(s in word(48)) {
        let w = common::text(&s);
        let b = bwt(&w).unwrap();
        let expected = common::bwt(&s);
        prop_assert_eq!(common::ranks(&b.output), expected.clone());
        prop_assert_eq!(b.run_count, common::runs(&expected));
        let d = bwt_sentinel(&w).unwrap();
        prop_assert_eq!(common::ranks(&d.output), common::bwt_sentinel(&s));
        let bb = bbwt(&w).unwrap();
        prop_assert_eq!(common::ranks(&bb.output), common::bbwt(&s));
    }

    #[test]
    fn transforms_permute_the_input(s in word(48)) {
        let w = common::text(&s);
        prop_assert_eq!(sorted(common::ranks(&bwt(&w).unwrap().output)), sorted(s.clone()));
        prop_assert_eq!(sorted(common::ranks(&bbwt(&w).unwrap().output)), sorted(s.clone()));
        let shifted: Vec<u32> = std::iter::once(0).chain(s.iter().map(|c| c + 1)).collect();
        prop_assert_eq!(sorted(common::ranks(&bwt_sentinel(&w).unwrap().output)), sorted(shifted));
    }

    #[test]
    fn bwt_is_rotation_invariant(s in word(32), k in 0usize..32) {
        let w = common::text(&s);
        let r = rotate(&w, k % s.len()).unwrap();
        prop_assert_eq!(bwt(&w).unwrap().output, bwt(&r).unwrap().output);
    }

    #[test]
    fn parsings_match_oracle(s in word(48)) {
        let w = common::text(&s);
        for (p, expected) in [
            (lz_parse(&w).unwrap(), common::lz(&s)),
            (lz_no_overlap(&w).unwrap(), common::lz_no_overlap(&s)),
            (lz_end_greedy(&w).unwrap(), common::lz_end_greedy(&s)),
            (lex_parse(&w).unwrap(), common::lex_parse(&s)),
        ] {
            prop_assert_eq!(p.lengths(), expected, "{:?}", p.variant);
            prop_assert!(p.validate(&w).is_ok(), "{:?}", p.validate(&w));
            prop_assert_eq!(p.decode(), Some(w.symbols().to_vec()));
        }
    }

    #[test]
    fn optimal_lz_end_matches_exhaustive(s in word(11)) {
        let w = common::text(&s);
        let (p, exact) = lz_end_optimal(&w, u64::MAX).unwrap();
        prop_assert!(exact);
        prop_assert!(p.validate(&w).is_ok());
        prop_assert_eq!(p.decode(), Some(w.symbols().to_vec()));
        prop_assert_eq!(p.len(), common::z_end(&s));
    }

    #[test]
    fn measure_sandwich(s in word(40)) {
        let w = common::text(&s);
        let z = lz_parse(&w).unwrap().len();
        let (end, exact) = lz_end_optimal(&w, u64::MAX).unwrap();
        prop_assert!(exact);
        prop_assert!(z <= end.len() && end.len() <= lz_end_greedy(&w).unwrap().len());
        prop_assert!(z <= lz_no_overlap(&w).unwrap().len());
    }

    #[test]
    fn delta_matches_oracle_and_is_reversal_invariant(s in word(40)) {
        let w = common::text(&s);
        let (num, den) = common::delta(&s);
        let d = substring_complexity(&w).unwrap();
        prop_assert_eq!(d, Rational::new(num as i64, den as i64));
        prop_assert_eq!(d, substring_complexity(&reverse(&w)).unwrap());
    }

    #[test]
    fn right_extensions_match_oracle(s in word(30)) {
        prop_assert_eq!(right_extension_count(&common::text(&s)).unwrap(), common::right_extensions(&s));
    }

    #[test]
    fn lyndon_factorization_is_unique_decomposition(s in word(48)) {
        let w = common::text(&s);
        let factors = lyndon_factorize(&w).unwrap();
        let expected = common::lyndon_factors(&s);
        prop_assert_eq!(factors.iter().map(common::ranks).collect::<Vec<_>>(), expected);
        for pair in factors.windows(2) {
            prop_assert!(pair[0].symbols() >= pair[1].symbols());
        }
        for f in &factors {
            prop_assert!(is_lyndon(f).unwrap());
        }
    }

    #[test]
    fn lyndon_check_matches_definition(s in word(24)) {
        prop_assert_eq!(is_lyndon(&common::text(&s)).unwrap(), common::is_lyndon(&s));
    }

    #[test]
    fn reverse_and_rle_round_trip(s in word(64)) {
        let w = common::text(&s);
        prop_assert_eq!(reverse(&reverse(&w)), w.clone());
        let enc = rle(&w);
        prop_assert_eq!(enc.expand(), w.symbols().to_vec());
        prop_assert_eq!(enc.len(), common::runs(&s));
    }

    #[test]
    fn reports_are_antisymmetric(s in word(24)) {
        let w = common::text(&s);
        let measures = [MeasureId::R, MeasureId::RB, MeasureId::Z, MeasureId::V, MeasureId::Delta, MeasureId::E];
        let fwd = sensitivity_report(&w, &measures, MeasureOptions::default()).unwrap();
        let rev = sensitivity_report(&reverse(&w), &measures, MeasureOptions::default()).unwrap();
        for (a, b) in fwd.iter().zip(&rev) {
            let swapped: SensitivityReport = a.swapped();
            prop_assert_eq!(&swapped, b);
            prop_assert_eq!(a.additive, -b.additive);
            prop_assert_eq!(a.multiplicative.map(|m| m.recip()), b.multiplicative);
        }
    }

    #[test]
    fn serializations_round_trip(s in prop::collection::vec(0u32..6, 1..40)) {
        let ascii: String = s.iter().map(|&c| char::from(b'a' + c as u8)).collect();
        let w = Text::from_ascii(&ascii);
        let out = write_ascii(&w).unwrap();
        prop_assert_eq!(parse_text(&out, None).unwrap(), w.clone());
        let tokens = write_tokens(&w);
        let back = parse_text(&tokens, None).unwrap();
        prop_assert_eq!(back.tokens(), w.tokens());
    }
}
