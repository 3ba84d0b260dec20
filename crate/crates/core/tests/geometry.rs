use alpha_curvelets::frame::{build_geometry, FrameParams};

#[test]
fn cells_have_bounded_redundancy() {
    for alpha in [0.0, 0.25, 0.5, 0.6, 0.75, 0.9, 1.0] {
        for size in [16, 64, 256, 512] {
            let params = FrameParams::new(alpha, size).unwrap();
            let g = build_geometry(&params).unwrap();
            let mut total = g.coarse.len() + g.residual.len();
            for w in &g.wedges {
                let j = w.index.j;
                let l = params.orientations(j) as f64;
                assert!(w.cell.rows >= 1 << j, "{alpha} {size} {:?}", w.index);
                assert!(w.cell.cols >= 1 << (alpha * j as f64).ceil() as u32);
                assert!(w.cell.len() >= w.support_size);
                assert!(w.cell.len() <= 3 * w.support_size, "{alpha} {size} {:?}", w.index);
                assert!(w.cell.len() as f64 <= 64.0 * 4f64.powi(j as i32) / l);
                let r = w.rotation;
                assert!((r[0][0] * r[1][1] - r[0][1] * r[1][0] - 1.0).abs() < 1e-14);
                total += w.cell.len();
            }
            assert_eq!(total, g.coefficient_count());
            // Whole-frame redundancy stays bounded independently of M.
            assert!(total as f64 <= 6.0 * (size * size) as f64, "{alpha} {size} {total}");
        }
    }
}
