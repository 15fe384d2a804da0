use std::fmt::Write;

use num_bigint::BigInt;

use super::DigitSpec;
use crate::{Error, Result};

const MAX_TREE_DEPTH: usize = 6;

/// Which of the two order-2 values the tree expands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeRoot {
    Alpha,
    Beta,
}

enum Node {
    A(usize),
    B(usize),
    One,
}

/// ASCII rendering of the order-2 bifurcating tree down to `depth`.
///
/// An `a_i` node has upper child `b_(i+1)` and lower child `a_(i+1)`; a
/// `b_i` node has upper child the literal 1 and lower child `a_(i+1)`. A
/// node p with children q over r stands for p + q/r.
pub fn render_tree(spec: &DigitSpec, depth: usize, root: TreeRoot) -> Result<String> {
    if spec.order() != 2 {
        return Err(Error::UnsupportedOrder {
            supported: 2,
            got: spec.order(),
        });
    }
    if depth > MAX_TREE_DEPTH {
        return Err(Error::TreeTooDeep(depth));
    }
    let digits = spec.unroll(depth)?;
    let name = match root {
        TreeRoot::Alpha => "alpha",
        TreeRoot::Beta => "beta",
    };
    let mut out = String::new();
    writeln!(out, "# {name} tree, depth {depth}").unwrap();
    writeln!(
        out,
        "# rule: a_i -> a_i + b_(i+1)/a_(i+1), b_i -> b_i + 1/a_(i+1)"
    )
    .unwrap();
    writeln!(
        out,
        "# node p with upper child q and lower child r reads p + q/r"
    )
    .unwrap();
    let top = match root {
        TreeRoot::Alpha => Node::A(0),
        TreeRoot::Beta => Node::B(0),
    };
    write_node(&mut out, &digits, &top, depth, "", None);
    Ok(out)
}

fn label(digits: &[Vec<BigInt>], node: &Node) -> String {
    match node {
        Node::A(i) => format!("a{i}={}", digits[0][*i]),
        Node::B(i) => format!("b{i}={}", digits[1][*i]),
        Node::One => "1".to_string(),
    }
}

/// `last` is `None` for the root, otherwise whether this is the lower child.
fn write_node(
    out: &mut String,
    digits: &[Vec<BigInt>],
    node: &Node,
    depth: usize,
    prefix: &str,
    last: Option<bool>,
) {
    let connector = match last {
        None => "",
        Some(false) => "+-- ",
        Some(true) => "`-- ",
    };
    writeln!(out, "{prefix}{connector}{}", label(digits, node)).unwrap();
    let children = match node {
        Node::A(i) if *i < depth => [Node::B(i + 1), Node::A(i + 1)],
        Node::B(i) if *i < depth => [Node::One, Node::A(i + 1)],
        _ => return,
    };
    let child_prefix = match last {
        None => prefix.to_string(),
        Some(false) => format!("{prefix}|   "),
        Some(true) => format!("{prefix}    "),
    };
    let [upper, lower] = children;
    write_node(out, digits, &upper, depth, &child_prefix, Some(false));
    write_node(out, digits, &lower, depth, &child_prefix, Some(true));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn body(text: &str) -> Vec<&str> {
        text.lines().filter(|l| !l.starts_with('#')).collect()
    }

    #[test]
    fn moore_depth_one() {
        let spec = DigitSpec::constant(&[1, 0]).unwrap();
        let tree = render_tree(&spec, 1, TreeRoot::Alpha).unwrap();
        assert_eq!(body(&tree), vec!["a0=1", "+-- b1=0", "`-- a1=1"]);
    }

    #[test]
    fn beta_depth_one() {
        let spec = DigitSpec::constant(&[1, 1]).unwrap();
        let tree = render_tree(&spec, 1, TreeRoot::Beta).unwrap();
        assert_eq!(body(&tree), vec!["b0=1", "+-- 1", "`-- a1=1"]);
    }

    #[test]
    fn unit_depth_two() {
        let spec = DigitSpec::constant(&[1, 1]).unwrap();
        let tree = render_tree(&spec, 2, TreeRoot::Alpha).unwrap();
        assert_eq!(
            body(&tree),
            vec![
                "a0=1",
                "+-- b1=1",
                "|   +-- 1",
                "|   `-- a2=1",
                "`-- a1=1",
                "    +-- b2=1",
                "    `-- a2=1",
            ]
        );
    }

    #[test]
    fn rejects_other_orders_and_depths() {
        let m3 = DigitSpec::constant(&[1, 1, 1]).unwrap();
        assert!(matches!(
            render_tree(&m3, 1, TreeRoot::Alpha),
            Err(Error::UnsupportedOrder { got: 3, .. })
        ));
        let unit = DigitSpec::constant(&[1, 1]).unwrap();
        assert_eq!(
            render_tree(&unit, 7, TreeRoot::Alpha),
            Err(Error::TreeTooDeep(7))
        );
    }
}
