use hexatile::closed_forms::{fixed_count, fixed_count_even, macmahon_count, proportion, BoxDims};
use hexatile::exact_math::to_rational;
use hexatile::hexagon::{
    axis_positions, box_hexagon_cells, hexagon_cells, lower_region, normalize, trimmed_upper,
    AxisIndex, HexagonSpec,
};
use hexatile::lgv::{determinant, matrix_c, matrix_s};
use hexatile::oracle::{Enumerator, HalfWeightRule};
use num_bigint::BigInt;

#[test]
fn oracle_counts_match_every_closed_form() {
    let oracle = Enumerator::default();
    for side_a in 1..=3 {
        for side_m in 1..=4 {
            let spec = HexagonSpec::new(side_a, side_m).unwrap();
            let params = normalize(spec);
            let total = macmahon_count(spec.into());
            assert_eq!(oracle.count_tilings(&hexagon_cells(&spec)).unwrap(), total);
            for l in 1..=axis_positions(&params) {
                let axis = params.axis(l).unwrap();
                let fixed = oracle.count_with_fixed_rhombus(&spec, l).unwrap();
                assert_eq!(
                    fixed,
                    fixed_count(&params, axis).unwrap(),
                    "hexagon ({side_a},{side_m}) l={l}"
                );
                assert_eq!(
                    to_rational(&fixed) / to_rational(&total),
                    proportion(&params, axis).unwrap()
                );
            }
        }
    }
}

#[test]
fn axis_occupancy_sums_to_fixed_counts() {
    let oracle = Enumerator::default();
    for n in 1..=3u32 {
        for m in 1..=2u32 {
            let spec = HexagonSpec::new(n, 2 * m).unwrap();
            let (per_position, total_occupied) = oracle.axis_occupancy(&spec).unwrap();
            let formula_sum: BigInt = (1..=n)
                .map(|l| fixed_count_even(n, m, AxisIndex::within(l, n).unwrap()).unwrap())
                .sum();
            assert_eq!(per_position.iter().sum::<BigInt>(), total_occupied);
            assert_eq!(total_occupied, formula_sum);
        }
    }
}

#[test]
fn half_regions_match_determinants() {
    let oracle = Enumerator::default();
    for n in 1..=4u32 {
        for m in 0..=3u32 {
            let upper = trimmed_upper(n, m);
            assert_eq!(
                to_rational(&oracle.count_tilings(&upper.cells).unwrap()),
                determinant(&matrix_s(n, m)),
                "S({n},{m})"
            );
            if m == 0 {
                continue;
            }
            for l in 1..=n {
                let lower = lower_region(n, m, l).unwrap();
                let weighted = oracle
                    .weighted_count(&lower, HalfWeightRule::TopHorizontal)
                    .unwrap()
                    .value;
                assert_eq!(
                    weighted,
                    determinant(&matrix_c(n, m, AxisIndex::within(l, n).unwrap())),
                    "C({n},{m},{l})"
                );
            }
        }
    }
}

#[test]
fn general_boxes_match_product_formula() {
    let oracle = Enumerator::default();
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let counted = oracle.count_tilings(&box_hexagon_cells(a, b, c)).unwrap();
                assert_eq!(
                    counted,
                    macmahon_count(BoxDims::new(a, b, c)),
                    "box ({a},{b},{c})"
                );
            }
        }
    }
}
