//! Validation reports: every violated axiom together with the elements that witness it.

use std::fmt;

use serde::Serialize;

/// Number of violations kept by a report unless configured otherwise.
pub const DEFAULT_LIMIT: usize = 10;

/// The individual laws checked by the validators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    // groups
    GroupIdentity,
    GroupInverse,
    Associativity,
    // homomorphisms
    HomMultiplicative,
    HomIdentity,
    // self-actions and external actions
    ActionIdentity,
    ActionCompatibility,
    ActionByAutomorphisms,
    PreservesSelfAction,
    // subgroups
    SubgroupIdentity,
    SubgroupClosure,
    SubgroupInverse,
    // generalized crossed modules
    XModEquivariance,
    XModSelfActionMatch,
    // morphisms of generalized crossed modules
    MorphismSquare,
    MorphismEquivariance,
    // generalized cat1-groups
    Cat1SourceTarget,
    Cat1TargetSource,
    Cat1KernelsAct,
    Cat1MorphismSource,
    Cat1MorphismTarget,
    // coverings and liftings
    CoveringBijective,
    LiftingFactorization,
    CoveringMorphismTriangle,
    LiftingMorphismTriangle,
    LiftingMorphismPhi,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::GroupIdentity => "identity law",
            Rule::GroupInverse => "inverse law",
            Rule::Associativity => "associativity",
            Rule::HomMultiplicative => "homomorphism law",
            Rule::HomIdentity => "homomorphism preserves identity",
            Rule::ActionIdentity => "action identity law",
            Rule::ActionCompatibility => "action compatibility law",
            Rule::ActionByAutomorphisms => "action by automorphisms",
            Rule::PreservesSelfAction => "preserves self-action",
            Rule::SubgroupIdentity => "subgroup contains identity",
            Rule::SubgroupClosure => "subgroup closed under product",
            Rule::SubgroupInverse => "subgroup closed under inverse",
            Rule::XModEquivariance => "crossed module condition (i)",
            Rule::XModSelfActionMatch => "crossed module condition (ii)",
            Rule::MorphismSquare => "morphism square commutes",
            Rule::MorphismEquivariance => "morphism is equivariant",
            Rule::Cat1SourceTarget => "cat1 condition st = t",
            Rule::Cat1TargetSource => "cat1 condition ts = s",
            Rule::Cat1KernelsAct => "cat1 kernel condition",
            Rule::Cat1MorphismSource => "cat1 morphism fs = s'f",
            Rule::Cat1MorphismTarget => "cat1 morphism ft = t'f",
            Rule::CoveringBijective => "covering domain map bijective",
            Rule::LiftingFactorization => "lifting factorization",
            Rule::CoveringMorphismTriangle => "covering morphism triangle commutes",
            Rule::LiftingMorphismTriangle => "lifting morphism triangle commutes",
            Rule::LiftingMorphismPhi => "lifting morphism carries phi to phi'",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed instance of a law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Which component the law was checked on (`"A"`, `"B.self_action"`, `"alpha"`...).
    /// Empty for top-level checks.
    pub scope: String,
    pub rule: Rule,
    /// The elements at which the law fails, in the order the law quantifies them.
    pub witness: Vec<usize>,
    /// The failing equation, written with `^g h` for self-actions and `b·a` for actions.
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.scope.is_empty() {
            write!(f, "[{}] ", self.scope)?;
        }
        write!(f, "{} at {:?}: {}", self.rule, self.witness, self.detail)
    }
}

/// Collected violations of a validator run.
///
/// Only the first `limit` violations are kept, but `total` counts all of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub total: usize,
    pub limit: usize,
}

impl Default for ValidationReport {
    fn default() -> Self {
        Self::with_limit(DEFAULT_LIMIT)
    }
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: usize) -> Self {
        Self {
            violations: Vec::new(),
            total: 0,
            limit,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.total == 0
    }

    pub fn truncated(&self) -> bool {
        self.total > self.violations.len()
    }

    pub fn push(&mut self, rule: Rule, witness: Vec<usize>, detail: impl Into<String>) {
        self.push_scoped("", rule, witness, detail);
    }

    pub(crate) fn push_scoped(
        &mut self,
        scope: &str,
        rule: Rule,
        witness: Vec<usize>,
        detail: impl Into<String>,
    ) {
        self.total += 1;
        if self.violations.len() < self.limit {
            self.violations.push(Violation {
                scope: scope.to_string(),
                rule,
                witness,
                detail: detail.into(),
            });
        }
    }

    /// Folds `other` into this report, prefixing the scope of each violation.
    pub fn absorb(&mut self, scope: &str, other: ValidationReport) {
        // violations beyond the other report's own limit were only counted
        self.total += other.total - other.violations.len();
        for mut v in other.violations {
            v.scope = match (scope.is_empty(), v.scope.is_empty()) {
                (true, _) => v.scope,
                (false, true) => scope.to_string(),
                (false, false) => format!("{scope}.{}", v.scope),
            };
            self.total += 1;
            if self.violations.len() < self.limit {
                self.violations.push(v);
            }
        }
    }

    /// First violation for `rule`, if any was kept.
    pub fn first(&self, rule: Rule) -> Option<&Violation> {
        self.violations.iter().find(|v| v.rule == rule)
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.first(rule).is_some()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        writeln!(f, "{} violation(s)", self.total)?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        if self.truncated() {
            writeln!(f, "  ... {} more", self.total - self.violations.len())?;
        }
        Ok(())
    }
}
