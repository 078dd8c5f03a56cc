use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use super::{parse, BinOp, Expr, ExprError, Function, Span};
use crate::error::GrossError;
use crate::fractal::{Fractal, FractalSnapshot};
use crate::linear::GrossLinear;
use crate::process::{is_sequentially_countable, sequential_reach};
use crate::value::GrossValue;

/// Evaluates an expression to its canonical value.
///
/// Inside expressions, `carpet`, `sponge` and `cantor` yield the total
/// measure, `reach` the farthest position, `countable` 1 or 0, `compare`
/// -1, 0 or 1, and `approx(e, m)` the rational value of `e` at `① := m`.
pub fn evaluate(e: &Expr) -> Result<GrossValue, ExprError> {
    match e {
        Expr::Number(r, _) => Ok(GrossValue::rational(r.clone())),
        Expr::Grossone(_) => Ok(GrossValue::grossone()),
        Expr::Neg(x, span) => at(*span, evaluate(x)?.checked_neg()),
        Expr::Binary { op, lhs, rhs, span } => {
            let a = evaluate(lhs)?;
            let b = evaluate(rhs)?;
            let r = match op {
                BinOp::Add => a.checked_add(&b),
                BinOp::Sub => a.checked_sub(&b),
                BinOp::Mul => a.checked_mul(&b),
                BinOp::Div => a.checked_div(&b),
                BinOp::Pow => a.checked_pow(&b),
            };
            at(*span, r)
        }
        Expr::Call { func, args, span } => call(*func, args, *span),
    }
}

/// Parses and evaluates in one step.
pub fn evaluate_str(input: &str) -> Result<GrossValue, ExprError> {
    evaluate(&parse(input)?)
}

fn call(func: Function, args: &[Expr], span: Span) -> Result<GrossValue, ExprError> {
    match func {
        Function::Carpet | Function::Sponge | Function::Cantor => {
            let fractal = match func {
                Function::Carpet => Fractal::Carpet,
                Function::Sponge => Fractal::Sponge,
                _ => Fractal::Cantor,
            };
            let s = snapshot(fractal, &args[0], &args[1], span)?;
            Ok(s.total_measure().clone())
        }
        Function::Reach => {
            let start = eval_linear(&args[0])?;
            at(span, sequential_reach(&start).map(GrossValue::from))
        }
        Function::Countable => {
            let v = evaluate(&args[0])?;
            let yes = at(span, is_sequentially_countable(&v))?;
            Ok(GrossValue::integer(i32::from(yes)))
        }
        Function::Compare => {
            let a = evaluate(&args[0])?;
            let b = evaluate(&args[1])?;
            Ok(GrossValue::integer(match a.cmp(&b) {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            }))
        }
        Function::Approx => {
            let v = evaluate(&args[0])?;
            let m = eval_substitution_point(&args[1])?;
            at(span, v.eval_at(&m).map(GrossValue::rational))
        }
    }
}

pub(super) fn snapshot(
    fractal: Fractal,
    k: &Expr,
    n: &Expr,
    span: Span,
) -> Result<FractalSnapshot, ExprError> {
    let k = eval_linear(k)?;
    let n = eval_linear(n)?;
    at(span, FractalSnapshot::new(fractal, k, n))
}

/// Evaluates to an affine `a·① + b` with integer coefficients.
pub(super) fn eval_linear(e: &Expr) -> Result<GrossLinear, ExprError> {
    let v = evaluate(e)?;
    v.as_linear().ok_or_else(|| ExprError::Eval {
        span: e.span(),
        error: GrossError::NotLinear(v.to_string()),
    })
}

/// Evaluates to a finite integer `m >= 1`.
pub(super) fn eval_substitution_point(e: &Expr) -> Result<BigInt, ExprError> {
    let v = evaluate(e)?;
    match v.as_rational() {
        Some(r) if r.is_integer() && r >= num_rational::BigRational::one() => Ok(r.to_integer()),
        _ => Err(ExprError::Eval {
            span: e.span(),
            error: GrossError::InvalidSubstitution(v.to_string()),
        }),
    }
}

fn at<T>(span: Span, r: Result<T, GrossError>) -> Result<T, ExprError> {
    r.map_err(|error| ExprError::Eval { span, error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::Notation;

    fn show(s: &str) -> String {
        evaluate_str(s).unwrap().to_string()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(show("g1 + 1"), "①+1");
        assert_eq!(show("g1^3 - 2"), "①^3-2");
        assert_eq!(show("(g1-1)*(g1+1)"), "①^2-1");
        assert_eq!(show("8/9^g1"), "(1/9)^①*8");
        assert_eq!(show("0.5 + 1/4"), "3/4");
        assert_eq!(show("g1^3/g1"), "①^2");
    }

    #[test]
    fn exponential_routes_to_measure() {
        let v = evaluate_str("(8/9)^(g1-1)").unwrap();
        let GrossValue::Exp(m) = &v else {
            panic!("expected a measure, got {v}");
        };
        let map: Vec<(String, String)> = m
            .factors()
            .iter()
            .map(|(p, g)| (p.to_string(), g.to_string()))
            .collect();
        assert_eq!(
            map,
            vec![
                ("2".to_string(), "3*①-3".to_string()),
                ("3".to_string(), "-2*①+2".to_string())
            ]
        );
        assert_eq!(v.to_string(), "(8/9)^(①-1)");
        assert_eq!(v.display(Notation::Ascii), "(8/9)^(g1-1)");
        assert_eq!(show("(20/27)^(①-2)"), "(20/27)^(①-2)");
    }

    #[test]
    fn mixed_scale_addition_reports_span() {
        let err = evaluate_str("(8/9)^g1 + g1").unwrap_err();
        match err {
            ExprError::Eval { span, error } => {
                assert_eq!(span, Span::new(0, 13));
                assert!(matches!(error, GrossError::MixedScaleAddition(..)));
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = evaluate_str("1 + (1/0)").unwrap_err();
        assert_eq!(err.span(), Span::new(4, 9));
    }

    #[test]
    fn calls() {
        assert_eq!(show("carpet(1, g1)"), "(8/9)^(①-1)");
        assert_eq!(show("sponge(1, g1-1)"), "(20/27)^(①-2)");
        assert_eq!(show("cantor(1, 3)"), "8/27");
        assert_eq!(show("reach(3)"), "①+2");
        assert_eq!(show("countable(8^(g1-1))"), "0");
        assert_eq!(show("countable(g1)"), "1");
        assert_eq!(show("compare(g1+1, g1)"), "1");
        assert_eq!(show("approx(carpet(1, g1), 4)"), "512/729");
        assert!(evaluate_str("approx(g1, 0)").is_err());
        assert!(evaluate_str("approx(g1, g1)").is_err());
        assert!(evaluate_str("carpet(1/2, g1)").is_err());
        assert!(evaluate_str("carpet(1, g1+1)").is_err());
        assert!(evaluate_str("reach(0)").is_err());
    }
}
