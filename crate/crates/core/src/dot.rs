//! Graphviz export of the specialization order.

use std::fmt::Write;

use crate::powerspace::IndexedSpace;
use crate::space::FiniteSpace;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram, drawn bottom to top, nodes in point order.
pub fn hasse_dot(x: &FiniteSpace, title: &str) -> String {
    let order = x.specialization_order();
    let mut covers = order.covers();
    covers.sort_unstable();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for i in 0..x.len() {
        writeln!(out, "  n{i} [label={}];", quote(&x.name(i))).unwrap();
    }
    for (a, b) in covers {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Names the points of a power space by their members, e.g. `{a,b}`.
pub fn name_members(base: &FiniteSpace, ps: &IndexedSpace) -> FiniteSpace {
    let names = ps.elems.iter().map(|&e| format!("{{{}}}", base.set_names(e).join(","))).collect();
    ps.space.clone().with_names(names).expect("one name per member")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powerspace::smyth_space;

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn sierpinski_diagram() {
        let d = hasse_dot(&FiniteSpace::sierpinski(), "S");
        assert_eq!(d.lines().filter(|l| l.contains("[label=")).count(), 2);
        assert_eq!(edges(&d), 1);
        assert!(d.contains("n0 -> n1;"));
    }

    #[test]
    fn smyth_of_v() {
        let v = FiniteSpace::v_space();
        let ps = smyth_space(&v).unwrap();
        let d = hasse_dot(&name_members(&v, &ps), "PS");
        assert_eq!(ps.len(), 4);
        assert!(d.contains("{b,c}"));
        // X ⊑ {b,c} ⊑ {b}, {c}
        assert_eq!(edges(&d), 3);
    }
}
