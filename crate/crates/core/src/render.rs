//! Text and SVG rendering of boards and puzzles.

use crate::board::{BlackConfig, Square, WhiteConfig};
use crate::game::MoveRecord;
use crate::puzzles::Puzzle;
use crate::specialization::specialization_sequence;
use std::fmt::Write as _;

/// ASCII picture of a board state: `●` black, `○` white, `◉` both on the
/// same square, `·` empty.  Row 1 is printed on top.
pub fn ascii_board(black: &BlackConfig, white: &WhiteConfig) -> String {
    let n = black.n();
    let mut out = String::new();
    for r in 1..=n {
        for c in 1..=n {
            let sq = Square::new(r, c);
            let b = black.has_checker(sq);
            let w = white.iter().any(|x| x == sq);
            let ch = match (b, w) {
                (true, true) => '◉',
                (true, false) => '●',
                (false, true) => '○',
                (false, false) => '·',
            };
            out.push(ch);
            if c < n {
                out.push(' ');
            }
        }
        out.push('\n');
    }
    out
}

const CELL: f64 = 32.0;
const MARGIN: f64 = 16.0;

/// SVG picture of a single board state.
pub fn svg_board(black: &BlackConfig, white: &WhiteConfig) -> String {
    let n = black.n();
    let size = 2.0 * MARGIN + n as f64 * CELL;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">"
    );
    svg_board_group(&mut s, black, white, MARGIN, MARGIN);
    s.push_str("</svg>\n");
    s
}

fn svg_board_group(s: &mut String, black: &BlackConfig, white: &WhiteConfig, x0: f64, y0: f64) {
    let n = black.n();
    let side = n as f64 * CELL;
    let _ = writeln!(
        s,
        "<rect x=\"{x0}\" y=\"{y0}\" width=\"{side}\" height=\"{side}\" \
         fill=\"white\" stroke=\"black\"/>"
    );
    for i in 1..n {
        let t = i as f64 * CELL;
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{y0}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\"/>",
            x0 + t,
            x0 + t,
            y0 + side
        );
        let _ = writeln!(
            s,
            "<line x1=\"{x0}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\"/>",
            y0 + t,
            x0 + side,
            y0 + t
        );
    }
    let center = |sq: Square| {
        (
            x0 + (sq.col as f64 - 0.5) * CELL,
            y0 + (sq.row as f64 - 0.5) * CELL,
        )
    };
    for sq in black.squares() {
        let (cx, cy) = center(sq);
        let _ = writeln!(
            s,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" fill=\"black\"/>",
            CELL * 0.30
        );
    }
    for sq in white.iter() {
        let (cx, cy) = center(sq);
        let _ = writeln!(
            s,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" fill=\"white\" \
             stroke=\"black\" stroke-width=\"2\"/>",
            CELL * 0.22
        );
    }
}

/// SVG strip showing a whole game: the initial position followed by the
/// position after each move, labelled by the move letter and decision.
pub fn svg_game(
    n: usize,
    initial_white: &WhiteConfig,
    trace: &[MoveRecord],
) -> crate::error::Result<String> {
    let order = specialization_sequence(n);
    let frames = trace.len() + 1;
    let board_side = n as f64 * CELL;
    let frame_w = board_side + 2.0 * MARGIN;
    let frame_h = board_side + 2.0 * MARGIN + 18.0;
    let total_w = frame_w * frames as f64;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{total_w}\" height=\"{frame_h}\" \
         viewBox=\"0 0 {total_w} {frame_h}\" font-family=\"monospace\" font-size=\"12\">"
    );
    for f in 0..frames {
        let x0 = f as f64 * frame_w + MARGIN;
        let (black, whites, label) = if f == 0 {
            (
                order.black_states[0].clone(),
                initial_white.clone(),
                "start".to_string(),
            )
        } else {
            let rec = &trace[f - 1];
            let whites = WhiteConfig::new(
                rec.white_after
                    .iter()
                    .map(|&(r, c)| Square::new(r, c))
                    .collect(),
            )?;
            let black = order.black_states[f].clone();
            let mut label = format!("e{} {}", rec.letter, rec.decision);
            if rec.dagger {
                label.push('†');
            }
            (black, whites, label)
        };
        svg_board_group(&mut s, &black, &whites, x0, MARGIN);
        let _ = writeln!(
            s,
            "<text x=\"{x0}\" y=\"{}\">{label}</text>",
            MARGIN + board_side + 14.0
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// SVG picture of a puzzle: the triangular board with edge labels and
/// shaded pieces (1-triangles dark, rhombi mid-grey, K-pieces hatched red).
pub fn svg_puzzle(p: &Puzzle) -> String {
    let n = p.n;
    let unit = 48.0;
    let h = unit * 3f64.sqrt() / 2.0;
    let width = n as f64 * unit + 2.0 * MARGIN;
    let height = n as f64 * h + 2.0 * MARGIN;
    // Vertex of the triangle grid: row line m (0..=n), position j (0..=m).
    let vx = |m: usize, j: usize| MARGIN + (n as f64 - m as f64) * unit / 2.0 + j as f64 * unit;
    let vy = |m: usize| MARGIN + m as f64 * h;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"monospace\" font-size=\"11\">"
    );
    // Fill cells by label pattern: a cell is dark iff all its edges are 1,
    // light iff all 0, grey otherwise (part of a rhombus or K-piece).
    for m in 1..=n {
        for i in 1..=m {
            // Up cell U(m,i): vertices (m-1,i-1), (m,i-1), (m,i).
            let edges = [p.l[m - 1][i - 1], p.h[m - 1][i - 1], p.r[m - 1][i - 1]];
            let fill = cell_fill(&edges);
            let _ = writeln!(
                s,
                "<polygon points=\"{},{} {},{} {},{}\" fill=\"{fill}\" stroke=\"black\"/>",
                vx(m - 1, i - 1),
                vy(m - 1),
                vx(m, i - 1),
                vy(m),
                vx(m, i),
                vy(m)
            );
            if i < m {
                // Down cell D(m,i): vertices (m-1,i-1), (m-1,i), (m,i).
                let edges = [p.h[m - 2][i - 1], p.r[m - 1][i - 1], p.l[m - 1][i]];
                let fill = cell_fill(&edges);
                let _ = writeln!(
                    s,
                    "<polygon points=\"{},{} {},{} {},{}\" fill=\"{fill}\" stroke=\"black\"/>",
                    vx(m - 1, i - 1),
                    vy(m - 1),
                    vx(m - 1, i),
                    vy(m - 1),
                    vx(m, i),
                    vy(m)
                );
            }
        }
    }
    // Outline K-pieces.
    for piece in &p.pieces {
        if piece.kind == crate::puzzles::PieceKind::KPiece {
            let (m, i) = (piece.m, piece.i);
            // The size-2 down triangle has vertices (m-1,i-1), (m-1,i+1), (m+1,i).
            let _ = writeln!(
                s,
                "<polygon points=\"{},{} {},{} {},{}\" fill=\"none\" \
                 stroke=\"#c00\" stroke-width=\"3\"/>",
                vx(m - 1, i - 1),
                vy(m - 1),
                vx(m - 1, i + 1),
                vy(m - 1),
                vx(m + 1, i),
                vy(m + 1)
            );
        }
    }
    // Edge labels along all three line families.
    for m in 1..=n {
        for i in 1..=m {
            let lab = |v: u8| {
                if v == 2 {
                    "·".to_string()
                } else {
                    v.to_string()
                }
            };
            // Horizontal edge below U(m,i): midpoint of (m,i-1)-(m,i).
            let _ = writeln!(
                s,
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
                (vx(m, i - 1) + vx(m, i)) / 2.0,
                vy(m) - 3.0,
                lab(p.h[m - 1][i - 1])
            );
            // Forward-slant edge left of U(m,i): (m-1,i-1)-(m,i-1).
            let _ = writeln!(
                s,
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
                (vx(m - 1, i - 1) + vx(m, i - 1)) / 2.0 + 7.0,
                (vy(m - 1) + vy(m)) / 2.0,
                lab(p.l[m - 1][i - 1])
            );
            // Backslant edge right of U(m,i): (m-1,i-1)-(m,i).
            let _ = writeln!(
                s,
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
                (vx(m - 1, i - 1) + vx(m, i)) / 2.0 - 7.0,
                (vy(m - 1) + vy(m)) / 2.0,
                lab(p.r[m - 1][i - 1])
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

fn cell_fill(edges: &[u8; 3]) -> &'static str {
    if edges.iter().all(|&e| e == 1) {
        "#555"
    } else if edges.iter().all(|&e| e == 0) {
        "#fff"
    } else {
        "#bcd"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{initial_white, BlackConfig, InitialWhite, SubsetK};
    use crate::puzzles::{enumerate_puzzles, PuzzleMode};

    #[test]
    fn ascii_marks_all_three_symbols() {
        let black = BlackConfig::initial(3);
        // Put a white on a black square and one elsewhere.
        let white =
            crate::board::WhiteConfig::new(vec![Square::new(3, 1), Square::new(1, 2)]).unwrap();
        let pic = ascii_board(&black, &white);
        assert!(pic.contains('◉'));
        assert!(pic.contains('●'));
        assert!(pic.contains('○'));
        assert_eq!(pic.lines().count(), 3);
    }

    #[test]
    fn svg_outputs_are_well_formed_enough() {
        let a = SubsetK::new(vec![2, 4]).unwrap();
        let InitialWhite::Config(w) = initial_white(&a, &a, 4).unwrap() else {
            panic!("expected a game");
        };
        let svg = svg_board(&BlackConfig::initial(4), &w);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));

        let puzzles = enumerate_puzzles(&a, &a, None, 4, PuzzleMode::Cohomology).unwrap();
        let svg = svg_puzzle(&puzzles[0]);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("polygon"));
    }
}
