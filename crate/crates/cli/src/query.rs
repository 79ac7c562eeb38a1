//! Function selection, argument arity and evaluation.

use clap::ValueEnum;
use relprime::oracle::{self, OracleBudget};
use relprime::shonhiwa::{self, TupleOrdering, TupleQuery};
use relprime::{counting, parse_set_spec, Count, ProgressionUnion};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    #[value(name = "f")]
    F,
    #[value(name = "fk")]
    Fk,
    #[value(name = "phi")]
    Phi,
    #[value(name = "phik")]
    Phik,
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "T", alias = "t")]
    T,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::F => "f",
            Function::Fk => "fk",
            Function::Phi => "phi",
            Function::Phik => "phik",
            Function::S => "S",
            Function::G => "G",
            Function::L => "L",
            Function::H => "H",
            Function::T => "T",
        }
    }

    /// Which of `(set, n, k, m)` the function takes.
    fn arity(self) -> (bool, bool, bool, bool) {
        match self {
            Function::F => (true, false, false, false),
            Function::Fk => (true, false, true, false),
            Function::Phi => (true, true, false, false),
            Function::Phik => (true, true, true, false),
            Function::S | Function::L | Function::T => (false, true, true, true),
            Function::G | Function::H => (false, true, true, false),
        }
    }

    pub fn takes_set(self) -> bool {
        self.arity().0
    }
}

/// A fully checked invocation.
#[derive(Debug, Clone)]
pub struct Query {
    pub function: Function,
    /// The set text exactly as given, and its parsed form.
    pub set: Option<(String, ProgressionUnion)>,
    pub n: Option<u64>,
    pub k: Option<u64>,
    pub m: Option<u64>,
}

impl Query {
    pub fn new(
        function: Function,
        set: Option<String>,
        n: Option<u64>,
        k: Option<u64>,
        m: Option<u64>,
    ) -> Result<Self, CliError> {
        let (want_set, want_n, want_k, want_m) = function.arity();
        let name = function.name();
        let check = |present: bool, wanted: bool, flag: &str| -> Result<(), CliError> {
            match (present, wanted) {
                (false, true) => Err(CliError::Usage(format!("{name} requires {flag}"))),
                (true, false) => Err(CliError::Usage(format!("{name} does not take {flag}"))),
                _ => Ok(()),
            }
        };
        check(set.is_some(), want_set, "--set")?;
        check(n.is_some(), want_n, "--n")?;
        check(k.is_some(), want_k, "--k")?;
        check(m.is_some(), want_m, "--m")?;
        let set = match set {
            Some(text) => {
                let parsed = parse_set_spec(&text)?;
                Some((text, parsed))
            }
            None => None,
        };
        Ok(Self {
            function,
            set,
            n,
            k,
            m,
        })
    }

    fn x(&self) -> &ProgressionUnion {
        &self.set.as_ref().expect("arity checked").1
    }

    fn tuple_query(&self) -> Result<TupleQuery, CliError> {
        Ok(TupleQuery::new(
            self.n.expect("arity checked"),
            self.k.expect("arity checked"),
            self.m,
        )?)
    }

    /// Closed-form value.
    pub fn evaluate(&self) -> Result<Count, CliError> {
        let (n, k, m) = (self.n.unwrap_or(0), self.k.unwrap_or(0), self.m.unwrap_or(0));
        let value = match self.function {
            Function::F => counting::f(self.x())?,
            Function::Fk => counting::f_k(self.x(), k)?,
            Function::Phi => counting::phi(self.x(), n)?,
            Function::Phik => counting::phi_k(self.x(), n, k)?,
            Function::S => shonhiwa::s_count(n, k, m)?,
            Function::G => shonhiwa::g_count(n, k)?,
            Function::L => shonhiwa::l_count(n, k, m)?,
            Function::H => shonhiwa::h_count(n, k)?,
            Function::T => shonhiwa::t_count(n, k, m)?,
        };
        Ok(value)
    }

    /// Brute-force value.
    pub fn brute_force(&self, budget: &OracleBudget) -> Result<Count, CliError> {
        let (n, k) = (self.n.unwrap_or(0), self.k.unwrap_or(0));
        let value = match self.function {
            Function::F => oracle::brute_f(self.x(), budget)?,
            Function::Fk => oracle::brute_f_k(self.x(), k, budget)?,
            Function::Phi => oracle::brute_phi(self.x(), n, budget)?,
            Function::Phik => oracle::brute_phi_k(self.x(), n, k, budget)?,
            Function::S | Function::G => {
                oracle::brute_tuples(&self.tuple_query()?, TupleOrdering::Ordered, budget)?
            }
            Function::L | Function::H => {
                oracle::brute_tuples(&self.tuple_query()?, TupleOrdering::Nondecreasing, budget)?
            }
            Function::T => oracle::brute_tuples(&self.tuple_query()?, TupleOrdering::Strict, budget)?,
        };
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_is_enforced() {
        assert!(Query::new(Function::F, Some("1..4".into()), None, None, None).is_ok());
        assert!(Query::new(Function::F, None, None, None, None).is_err());
        assert!(Query::new(Function::F, Some("1..4".into()), Some(3), None, None).is_err());
        assert!(Query::new(Function::T, None, Some(4), Some(2), None).is_err());
        assert!(Query::new(Function::G, None, Some(4), Some(2), Some(6)).is_err());
    }

    #[test]
    fn evaluate_and_brute_force_agree_on_examples() {
        let b = OracleBudget::default();
        let cases = [
            Query::new(Function::F, Some("1..4".into()), None, None, None).unwrap(),
            Query::new(Function::Phi, Some("1..2 + 5..6".into()), Some(6), None, None).unwrap(),
            Query::new(Function::T, None, Some(4), Some(2), Some(6)).unwrap(),
            Query::new(Function::H, None, Some(5), Some(3), None).unwrap(),
        ];
        let expected = [11u32, 12, 5, 29];
        for (q, e) in cases.iter().zip(expected) {
            assert_eq!(q.evaluate().unwrap(), Count::from(e), "{:?}", q.function);
            assert_eq!(q.brute_force(&b).unwrap(), Count::from(e));
        }
    }
}
