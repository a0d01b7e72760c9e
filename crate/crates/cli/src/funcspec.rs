//! Textual function specifications accepted by `eval delta --f`.
//!
//! ```text
//! pow K                      x^K
//! poly c0,c1,...,cm          c0 + c1 x + ... + cm x^m
//! const V                    constant V
//! counterexample N           alpha(x)^(N+1) + beta(x)^(N+1)
//! strong-counterexample N C  the above plus C x^(N+1)
//! ```

use anyhow::{anyhow, bail, Context, Result};
use hoconvex::{
    counterexample_f, strong_counterexample, QuadElem, Radicand, Rational, RealFunction,
};

pub fn parse_function(spec: &str, radicand: Radicand) -> Result<RealFunction> {
    let mut words = spec.split_whitespace();
    let head = words.next().ok_or_else(|| anyhow!("empty function spec"))?;
    let args: Vec<&str> = words.collect();
    let arity = |n: usize| -> Result<()> {
        if args.len() != n {
            bail!(
                "function {head:?} takes {n} argument(s), got {}",
                args.len()
            );
        }
        Ok(())
    };
    let order = |text: &str| -> Result<u32> {
        text.parse()
            .with_context(|| format!("bad integer {text:?} in function spec"))
    };
    match head {
        "pow" => {
            arity(1)?;
            Ok(RealFunction::power(order(args[0])?))
        }
        "poly" => {
            arity(1)?;
            let coeffs = args[0]
                .split(',')
                .map(|c| c.parse::<Rational>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(RealFunction::polynomial(coeffs))
        }
        "const" => {
            arity(1)?;
            Ok(RealFunction::constant(args[0].parse::<QuadElem>()?))
        }
        "counterexample" => {
            arity(1)?;
            Ok(counterexample_f(order(args[0])?, radicand)?)
        }
        "strong-counterexample" => {
            arity(2)?;
            let c: Rational = args[1].parse()?;
            Ok(strong_counterexample(order(args[0])?, &c, radicand)?)
        }
        other => bail!("unknown function {other:?} (expected pow, poly, const, counterexample, strong-counterexample)"),
    }
}
