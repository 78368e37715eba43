//! Standard finite chains, their quantifiers, and direct products.

use num_rational::Ratio;

use crate::algebra::{validate_nm, Elem, FiniteNmAlgebra, NmTables};
use crate::error::{Error, Result};
use crate::quantifier::{check_universal, MonadicNmAlgebra, QuantifierMap};

/// The `n`-element NM-chain on the grid `{i/(n-1)}`, labelled by reduced
/// fractions.
pub fn nm_chain(n: usize) -> Result<FiniteNmAlgebra> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "a chain needs at least 2 elements, got {n}"
        )));
    }
    let top = n - 1;
    let neg = |x: Elem| top - x;
    let mul = |x: Elem, y: Elem| if x <= neg(y) { 0 } else { x.min(y) };
    let imp = |x: Elem, y: Elem| if x <= y { top } else { neg(x).max(y) };
    let tables = NmTables {
        name: format!("chain-{n}"),
        names: (0..n).map(|i| Ratio::new(i, top).to_string()).collect(),
        bottom: 0,
        top,
        leq: (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect(),
        mul: (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect(),
        imp: (0..n).map(|x| (0..n).map(|y| imp(x, y)).collect()).collect(),
    };
    validate_nm(&tables)
}

fn checked(a: &FiniteNmAlgebra, image: Vec<Elem>) -> Result<QuantifierMap> {
    let q = QuantifierMap::new(a, image)?;
    let r = check_universal(a, &q)?;
    let failed = r.failures().next().map(|c| c.id.clone());
    match failed {
        Some(id) => Err(Error::NotQuantifier(id)),
        None => Ok(q),
    }
}

/// On `nm_chain(m)`, rounds down to the embedded `n`-element subgrid.
pub fn subchain_quantifier(m: usize, n: usize) -> Result<QuantifierMap> {
    if n < 2 || m < n || !(m - 1).is_multiple_of(n - 1) {
        return Err(Error::Precondition(format!(
            "the {n}-element grid is not a subalgebra of the {m}-element chain"
        )));
    }
    let a = nm_chain(m)?;
    let step = (m - 1) / (n - 1);
    checked(&a, (0..m).map(|i| i / step * step).collect())
}

/// `∀x = 0` for `x ≠ 1`, `∀1 = 1`.
pub fn zero_one_quantifier(a: &FiniteNmAlgebra) -> Result<QuantifierMap> {
    let image = a
        .elements()
        .map(|x| if x == a.top() { x } else { a.bottom() })
        .collect();
    checked(a, image)
}

/// Componentwise product; element `(i, j)` has index `i·|B| + j` and label `i:j`.
pub fn product_algebra(x: &FiniteNmAlgebra, y: &FiniteNmAlgebra) -> Result<FiniteNmAlgebra> {
    let (n, k) = (x.size(), y.size());
    let split = |p: Elem| (p / k, p % k);
    let pair = |i: Elem, j: Elem| i * k + j;
    let lift = |f: &dyn Fn(Elem, Elem, Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
        (0..n * k)
            .map(|p| {
                (0..n * k)
                    .map(|q| {
                        let ((i, j), (s, t)) = (split(p), split(q));
                        f(i, j, s, t)
                    })
                    .collect()
            })
            .collect()
    };
    let tables = NmTables {
        name: format!("{}x{}", x.name(), y.name()),
        names: (0..n * k)
            .map(|p| format!("{}:{}", x.label(p / k), y.label(p % k)))
            .collect(),
        bottom: pair(x.bottom(), y.bottom()),
        top: pair(x.top(), y.top()),
        leq: (0..n * k)
            .map(|p| (0..n * k).map(|q| x.leq(p / k, q / k) && y.leq(p % k, q % k)).collect())
            .collect(),
        mul: lift(&|i, j, s, t| pair(x.mul(i, s), y.mul(j, t))),
        imp: lift(&|i, j, s, t| pair(x.imp(i, s), y.imp(j, t))),
    };
    validate_nm(&tables)
}

/// Product of two monadic algebras with the componentwise quantifier.
pub fn direct_product(m1: &MonadicNmAlgebra, m2: &MonadicNmAlgebra) -> Result<MonadicNmAlgebra> {
    let a = product_algebra(m1.algebra(), m2.algebra())?;
    let k = m2.size();
    let image = a.elements().map(|p| m1.forall(p / k) * k + m2.forall(p % k)).collect();
    let q = QuantifierMap::new(&a, image)?;
    MonadicNmAlgebra::new(a, q)
}

/// The two coordinate projections of a product built by [`product_algebra`].
pub fn projections(left: usize, right: usize) -> (Vec<Elem>, Vec<Elem>) {
    let total = left * right;
    (
        (0..total).map(|p| p / right).collect(),
        (0..total).map(|p| p % right).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::is_boolean;
    use crate::rational::{grid, standard_nm, StandardOp};

    #[test]
    fn chain_labels_and_midpoint() {
        let c = nm_chain(3).unwrap();
        assert_eq!(c.names(), ["0", "1/2", "1"]);
        assert_eq!(c.mul(1, 1), 0);
        assert_eq!(c.neg(1), 1);
        assert!(nm_chain(1).is_err());
        assert!(is_boolean(&nm_chain(2).unwrap()).unwrap().boolean);
    }

    #[test]
    fn five_chain_matches_rational_grid() {
        let c = nm_chain(5).unwrap();
        let g = grid(5).unwrap();
        for x in c.elements() {
            for y in c.elements() {
                assert_eq!(standard_nm(&g[x], &g[y], StandardOp::Mul), g[c.mul(x, y)]);
                assert_eq!(standard_nm(&g[x], &g[y], StandardOp::Imp), g[c.imp(x, y)]);
            }
        }
    }

    #[test]
    fn subchain_quantifiers() {
        let five = nm_chain(5).unwrap();
        assert_eq!(subchain_quantifier(5, 5).unwrap(), QuantifierMap::identity(&five));
        assert_eq!(subchain_quantifier(5, 3).unwrap().image(), &[0, 0, 2, 2, 4]);
        assert_eq!(subchain_quantifier(5, 2).unwrap(), zero_one_quantifier(&five).unwrap());
        assert!(subchain_quantifier(5, 4).is_err());
    }

    #[test]
    fn products() {
        let two = MonadicNmAlgebra::identity(nm_chain(2).unwrap());
        let square = direct_product(&two, &two).unwrap();
        assert!(is_boolean(square.algebra()).unwrap().boolean);
        assert_eq!(square.algebra().names(), ["0:0", "0:1", "1:0", "1:1"]);

        let c3 = nm_chain(3).unwrap();
        let z3 = MonadicNmAlgebra::new(c3.clone(), zero_one_quantifier(&c3).unwrap()).unwrap();
        let z2 = MonadicNmAlgebra::new(
            nm_chain(2).unwrap(),
            zero_one_quantifier(&nm_chain(2).unwrap()).unwrap(),
        )
        .unwrap();
        let p = direct_product(&z2, &z3).unwrap();
        assert!(!p.algebra().is_chain());

        // projections are surjective homomorphisms
        let (pl, pr) = projections(2, 3);
        let a = p.algebra();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(pl[a.mul(x, y)], z2.algebra().mul(pl[x], pl[y]));
                assert_eq!(pr[a.imp(x, y)], c3.imp(pr[x], pr[y]));
                assert_eq!(pr[a.join(x, y)], c3.join(pr[x], pr[y]));
            }
        }
        assert_eq!(pl.iter().max(), Some(&1));
        assert_eq!(pr.iter().max(), Some(&2));
    }
}
