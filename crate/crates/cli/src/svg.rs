//! SVG drawing of chord diagrams: circles side by side, chords as straight segments,
//! loop labels at the middle of one arc of each loop.

use mwlinks::chord::{Arc, ChordDiagram, PlanarLoop};
use std::fmt::Write as _;

const R: f64 = 80.0;
const GAP: f64 = 60.0;
const MARGIN: f64 = 40.0;

fn centre(k: usize) -> (f64, f64) {
    (MARGIN + R + k as f64 * (2.0 * R + GAP), MARGIN + R)
}

fn angle(cd: &ChordDiagram, p: usize) -> f64 {
    let n = cd.circles()[cd.circle_of(p)].len().max(1);
    -std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * cd.position(p) as f64 / n as f64
}

fn at(k: usize, ang: f64, r: f64) -> (f64, f64) {
    let (cx, cy) = centre(k);
    (cx + r * ang.cos(), cy + r * ang.sin())
}

fn arc_label_pos(cd: &ChordDiagram, a: Arc) -> (f64, f64) {
    match a {
        Arc::Circle(k) => at(k, -std::f64::consts::FRAC_PI_2, R + 18.0),
        Arc::After(p) => {
            let k = cd.circle_of(p);
            let a0 = angle(cd, p);
            let mut a1 = angle(cd, cd.next_endpoint(p));
            if a1 <= a0 {
                a1 += 2.0 * std::f64::consts::PI;
            }
            at(k, (a0 + a1) / 2.0, R + 18.0)
        }
    }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// `degrees[i]` labels `loops[i]`; without degrees the loop ids are shown.
pub fn render(cd: &ChordDiagram, loops: &[PlanarLoop], degrees: Option<&[u32]>) -> String {
    let l = cd.l().max(1);
    let w = 2.0 * MARGIN + l as f64 * 2.0 * R + (l - 1) as f64 * GAP;
    let h = 2.0 * MARGIN + 2.0 * R;
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for k in 0..cd.l() {
        let (cx, cy) = centre(k);
        writeln!(s, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{R}" fill="none" stroke="black" stroke-width="2"/>"#).unwrap();
    }
    for &(a, b) in cd.chords() {
        let (x1, y1) = at(cd.circle_of(a), angle(cd, a), R);
        let (x2, y2) = at(cd.circle_of(b), angle(cd, b), R);
        writeln!(s, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="steelblue" stroke-width="2"/>"#)
            .unwrap();
    }
    for p in 0..cd.num_points() {
        let (x, y) = at(cd.circle_of(p), angle(cd, p), R);
        let fill = if cd.is_endpoint(p) { "steelblue" } else { "black" };
        writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{fill}"/>"#).unwrap();
        let (tx, ty) = at(cd.circle_of(p), angle(cd, p), R - 14.0);
        writeln!(s, r#"<text x="{tx:.2}" y="{ty:.2}" font-size="10" text-anchor="middle">{}</text>"#, esc(cd.name(p)))
            .unwrap();
    }
    for (i, lp) in loops.iter().enumerate() {
        let Some(&a) = lp.arcs.first() else { continue };
        let (x, y) = arc_label_pos(cd, a);
        let label = match degrees {
            Some(d) => format!("{}: {}", lp.id, d[i]),
            None => lp.id.clone(),
        };
        writeln!(s, r#"<text x="{x:.2}" y="{y:.2}" font-size="12" fill="darkred" text-anchor="middle">{}</text>"#, esc(&label))
            .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
