use std::fmt::Write;

use cusp_norm::rational::to_f64;
use cusp_norm::{ManifoldData, Rational};

const SIZE: f64 = 600.0;

/// The polygon `{v : ‖v‖ <= ‖m‖}` and the ellipse `{v : len²(v) = level}` in
/// meridian-longitude coordinates, meridian along the x axis.
pub fn unit_ball_svg(m: &ManifoldData, level: Option<&Rational>) -> Result<String, String> {
    let cusp = m.cusp().ok_or("plot needs cusp data")?;
    let norm = m.norm().ok_or("plot needs norm data")?;
    let radius = Rational::from_integer(norm.meridian_norm());
    let level = match level {
        Some(l) => l.clone(),
        None => Rational::new(9.into(), 4.into()) * &radius * &radius,
    };

    let points: Vec<(f64, f64)> = norm
        .unit_ball_vertices()
        .iter()
        .map(|(x, y)| (to_f64(&(x * &radius)), to_f64(&(y * &radius))))
        .collect();

    let (a, b, c) = (to_f64(cusp.g_mm()), to_f64(cusp.g_ml()), to_f64(cusp.g_ll()));
    let s = to_f64(&level);
    let det = a * c - b * b;
    let theta = 0.5 * (2.0 * b).atan2(a - c);
    let (sin, cos) = theta.sin_cos();
    let along = a * cos * cos + 2.0 * b * sin * cos + c * sin * sin;
    let across = a * sin * sin - 2.0 * b * sin * cos + c * cos * cos;
    let (rx, ry) = ((s / along).sqrt(), (s / across).sqrt());

    let extent = points
        .iter()
        .flat_map(|&(x, y)| [x.abs(), y.abs()])
        .chain([(s * c / det).sqrt(), (s * a / det).sqrt()])
        .fold(0.0_f64, f64::max);
    let scale = 0.45 * SIZE / extent;

    let mut svg = String::new();
    let half = SIZE / 2.0;
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(svg, r#"  <title>{}: norm ball and length ellipse</title>"#, escape(m.name())).unwrap();
    writeln!(
        svg,
        r#"  <g transform="translate({half} {half}) scale({scale:.6} {:.6})" fill="none" stroke-width="2">"#,
        -scale
    )
    .unwrap();
    let coords: Vec<String> = points.iter().map(|(x, y)| format!("{x:.6},{y:.6}")).collect();
    writeln!(
        svg,
        r#"    <polygon points="{}" stroke="navy" vector-effect="non-scaling-stroke"/>"#,
        coords.join(" ")
    )
    .unwrap();
    writeln!(
        svg,
        r#"    <ellipse cx="0" cy="0" rx="{rx:.6}" ry="{ry:.6}" transform="rotate({:.6})" stroke="darkred" vector-effect="non-scaling-stroke"/>"#,
        theta.to_degrees()
    )
    .unwrap();
    svg.push_str("  </g>\n</svg>\n");
    Ok(svg)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
