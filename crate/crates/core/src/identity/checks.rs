//! Per-identity checkers over a fixed λ representation.
//!
//! A [`Checker`] owns the shared tables for one λ (Carlitz numbers, both
//! degenerate Stirling triangles along their independent routes, and the
//! poly-Bernoulli numbers per polylogarithm order). Tables are computed once
//! at construction and never mutated afterwards, so checks are independent
//! pure reads and the combinatorial sums can re-read entries freely.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::degenerate::{binomial_series_coeff, exp_series, log_series, polylog_series};
use crate::scalar::{
    binomial, binomial_rat, factorial_rat, integer_power, lambda_product_unchecked, rat, CoeffRing,
    Rational,
};
use crate::sequences::{
    carlitz_beta_table, deg_stirling1_expansion_table, deg_stirling1_recurrence_table,
    deg_stirling1_table, deg_stirling2_table, poly_bernoulli_integral_table, poly_bernoulli_series,
    stirling2_table, Triangle,
};
use crate::series::TruncatedSeries;

use super::{CheckId, Counterexample, FaultTarget, IdentityCheck, SuiteConfig, Verdict};

/// Accumulates a verdict: the first mismatch becomes the counterexample and
/// further comparisons are skipped.
struct CheckBuilder {
    name: &'static str,
    params: String,
    counterexample: Option<Counterexample>,
    notes: Vec<String>,
}

impl CheckBuilder {
    fn new(name: &'static str, params: String) -> Self {
        CheckBuilder {
            name,
            params,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    /// Compare one instance; returns false once the check has failed so
    /// loops can stop early.
    fn require<R: CoeffRing>(&mut self, location: String, lhs: &R, rhs: &R) -> bool {
        if self.counterexample.is_some() {
            return false;
        }
        if lhs != rhs {
            self.counterexample = Some(Counterexample {
                location,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
            return false;
        }
        true
    }

    fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name.to_string(),
            params: self.params,
            verdict: if self.counterexample.is_none() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            counterexample: self.counterexample,
            notes: self.notes,
        }
    }
}

/// All identity checks for one λ representation.
pub struct Checker<R: CoeffRing> {
    lambda: R,
    label: String,
    order: usize,
    k_min: i32,
    k_max: i32,
    budget: u64,
    carlitz: Vec<R>,
    carlitz_shifted: Vec<R>,
    stirling2: Triangle<R>,
    stirling1: Triangle<R>,
    stirling1_recurrence: Triangle<R>,
    stirling1_expansion: Triangle<R>,
    poly_series: BTreeMap<i32, TruncatedSeries<R>>,
    poly_numbers: BTreeMap<i32, Vec<R>>,
    poly_numbers_sum: BTreeMap<i32, Vec<R>>,
}

impl<R: CoeffRing> Checker<R> {
    /// Build the shared tables for one λ. `label` is the rendering used in
    /// report parameter strings ("symbolic" or the rational literal).
    pub fn new(lambda: R, label: &str, config: &SuiteConfig) -> Self {
        assert!(
            config.k_min <= config.k_max,
            "empty polylogarithm order range"
        );
        let order = config.order;
        let shift = R::one() - lambda.clone(); // the argument 1−λ
        let mut carlitz = carlitz_beta_table(&lambda, &R::zero(), order);
        let carlitz_shifted = carlitz_beta_table(&lambda, &shift, order);
        let stirling2 = deg_stirling2_table(&lambda, order);
        let stirling1 = deg_stirling1_table(&lambda, order);
        let mut stirling1_recurrence = deg_stirling1_recurrence_table(&lambda, order);
        let stirling1_expansion = deg_stirling1_expansion_table(&lambda, order);

        let mut ks: Vec<i32> = (config.k_min..=config.k_max).collect();
        for needed in [1, 2] {
            if !ks.contains(&needed) {
                ks.push(needed);
            }
        }
        let mut poly_series = BTreeMap::new();
        let mut poly_numbers = BTreeMap::new();
        let mut poly_numbers_sum = BTreeMap::new();
        for &k in &ks {
            let series = poly_bernoulli_series(k, &lambda, order);
            poly_numbers.insert(k, series.egf_values());
            poly_series.insert(k, series);
            poly_numbers_sum.insert(
                k,
                crate::sequences::poly_bernoulli_sum_table(k, &lambda, order),
            );
        }

        match config.fault {
            Some(FaultTarget::PolyBernoulliSum) => {
                let n = 2.min(order);
                let table = poly_numbers_sum.get_mut(&2).expect("k = 2 always built");
                table[n] = table[n].clone() + &R::one();
            }
            Some(FaultTarget::DegStirling1Recurrence) => {
                let n = 2.min(order);
                let k = 1.min(n);
                let bumped = stirling1_recurrence.value(n, k) + &R::one();
                stirling1_recurrence.set(n, k, bumped);
            }
            Some(FaultTarget::CarlitzSeries) => {
                let n = 1.min(order);
                carlitz[n] = carlitz[n].clone() + &R::one();
            }
            None => {}
        }

        Checker {
            lambda,
            label: label.to_string(),
            order,
            k_min: config.k_min,
            k_max: config.k_max,
            budget: config.composition_budget,
            carlitz,
            carlitz_shifted,
            stirling2,
            stirling1,
            stirling1_recurrence,
            stirling1_expansion,
            poly_series,
            poly_numbers,
            poly_numbers_sum,
        }
    }

    fn params_plain(&self) -> String {
        format!("order={} lambda={}", self.order, self.label)
    }

    fn params_with_k(&self) -> String {
        format!(
            "order={} k={}..{} lambda={}",
            self.order, self.k_min, self.k_max, self.label
        )
    }

    fn k_range(&self) -> impl Iterator<Item = i32> {
        self.k_min..=self.k_max
    }

    /// ∏_{j=1}^{m−1}(λ−j), the weight shared by several right-hand sides.
    fn lambda_product(&self, m: usize) -> R {
        lambda_product_unchecked(&self.lambda, m)
    }

    pub(crate) fn dispatch(&self, id: CheckId) -> IdentityCheck {
        match id {
            CheckId::LogExpInverse => self.log_exp_inverse(),
            CheckId::PolylogDerivative => self.polylog_derivative(),
            CheckId::PolylogOrderOne => self.polylog_order_one(),
            CheckId::DegExpDerivative => self.deg_exp_derivative(),
            CheckId::ExpLogBinomial => self.exp_log_binomial(),
            CheckId::StirlingOrthogonality => self.stirling_orthogonality(),
            CheckId::PolyBernoulliStirlingSum => self.poly_bernoulli_stirling_sum(),
            CheckId::PolyBernoulliIntegral => self.poly_bernoulli_integral(),
            CheckId::PolyBernoulliOrderOne => self.poly_bernoulli_order_one(),
            CheckId::PolyBernoulliConvolution => self.poly_bernoulli_convolution(),
            CheckId::PolyBernoulliMultinomial => self.poly_bernoulli_multinomial(),
            CheckId::PolyBernoulliDifference => self.poly_bernoulli_difference(),
            CheckId::Stirling2Delta => self.stirling2_delta(),
            CheckId::ClassicalStirlingDelta => classical_stirling_delta(self.order),
            CheckId::DegStirling1Recurrence => self.deg_stirling1_recurrence(),
            CheckId::ReciprocalPowerInversion => self.reciprocal_power_inversion(),
        }
    }

    /// e_λ(log_λ(1+t)) = 1+t and log_λ(1+(e_λ(t)−1)) = t.
    pub fn log_exp_inverse(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("log-exp-inverse", self.params_plain());
        let order = self.order;
        let exp = exp_series(&R::one(), &self.lambda, order);
        let log = log_series(&self.lambda, order);

        let forward = exp.compose(&log).expect("log vanishes at t = 0");
        let mut expected = TruncatedSeries::one(order);
        if order >= 1 {
            expected = expected.add(&TruncatedSeries::var(order));
        }
        for n in 0..=order {
            if !b.require(
                format!("e(log(1+t)), coefficient t^{n}"),
                forward.coeff(n),
                expected.coeff(n),
            ) {
                break;
            }
        }

        let backward = log
            .compose(&exp.sub(&TruncatedSeries::one(order)))
            .expect("e−1 vanishes at t = 0");
        let t = TruncatedSeries::var(order);
        for n in 0..=order {
            if !b.require(
                format!("log(e(t)), coefficient t^{n}"),
                backward.coeff(n),
                t.coeff(n),
            ) {
                break;
            }
        }
        b.finish()
    }

    /// d/dx l_{k,λ}(x) = l_{k−1,λ}(x)/x, coefficientwise through order−1.
    pub fn polylog_derivative(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("polylog-derivative", self.params_with_k());
        if self.order == 0 {
            return b.finish();
        }
        'outer: for k in self.k_range() {
            let lhs = polylog_series(k, &self.lambda, self.order).derive();
            let rhs = polylog_series(k - 1, &self.lambda, self.order).shift_down(1);
            for n in 0..self.order {
                if !b.require(
                    format!("k={k}, coefficient t^{n}"),
                    lhs.coeff(n),
                    rhs.coeff(n),
                ) {
                    break 'outer;
                }
            }
        }
        b.finish()
    }

    /// l_{1,λ}(x) = −log_λ(1−x).
    pub fn polylog_order_one(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("polylog-order-one", self.params_plain());
        let lhs = polylog_series(1, &self.lambda, self.order);
        let rhs = log_series(&self.lambda, self.order).alternate_signs().neg();
        for n in 0..=self.order {
            if !b.require(format!("coefficient t^{n}"), lhs.coeff(n), rhs.coeff(n)) {
                break;
            }
        }
        b.finish()
    }

    /// d/dx e_λ(−x) = −e_λ^{1−λ}(−x), both sides built independently.
    pub fn deg_exp_derivative(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("deg-exp-derivative", self.params_plain());
        if self.order == 0 {
            return b.finish();
        }
        let lhs = exp_series(&R::one(), &self.lambda, self.order)
            .alternate_signs()
            .derive();
        let shift = R::one() - self.lambda.clone();
        let rhs = exp_series(&shift, &self.lambda, self.order)
            .alternate_signs()
            .neg();
        for n in 0..self.order {
            if !b.require(format!("coefficient t^{n}"), lhs.coeff(n), rhs.coeff(n)) {
                break;
            }
        }
        b.finish()
    }

    /// Σ_k (x)_{k,λ}/k!·(log_λ(1+t))^k = (1+t)^x: composing e_λ^x with
    /// log_λ must reproduce the binomial series, for rational x.
    pub fn exp_log_binomial(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("exp-log-binomial", self.params_plain());
        let log = log_series(&self.lambda, self.order);
        'outer: for x in [rat(2, 1), rat(1, 2), rat(-1, 3)] {
            let composed = exp_series(&R::from_rational(&x), &self.lambda, self.order)
                .compose(&log)
                .expect("log vanishes at t = 0");
            for n in 0..=self.order {
                let expected = R::from_rational(&binomial_series_coeff(&x, n));
                if !b.require(
                    format!("x={x}, coefficient t^{n}"),
                    composed.coeff(n),
                    &expected,
                ) {
                    break 'outer;
                }
            }
        }
        b.finish()
    }

    /// The two degenerate Stirling triangles are inverse matrices:
    /// Σ_m S_{1,λ}(n,m)·S_{2,λ}(m,j) = δ_{n,j} and the transpose.
    pub fn stirling_orthogonality(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("stirling-orthogonality", self.params_plain());
        'outer: for n in 0..=self.order {
            for j in 0..=n {
                let mut forward = R::zero();
                let mut backward = R::zero();
                for m in j..=n {
                    forward = forward + &(self.stirling1.value(n, m) * &self.stirling2.value(m, j));
                    backward =
                        backward + &(self.stirling2.value(n, m) * &self.stirling1.value(m, j));
                }
                let expected = if n == j { R::one() } else { R::zero() };
                if !b.require(format!("S1·S2 at (n,j)=({n},{j})"), &forward, &expected) {
                    break 'outer;
                }
                if !b.require(format!("S2·S1 at (n,j)=({n},{j})"), &backward, &expected) {
                    break 'outer;
                }
            }
        }
        b.finish()
    }

    /// Generating-function route vs the explicit Stirling-weighted sum for
    /// the poly-Bernoulli numbers.
    pub fn poly_bernoulli_stirling_sum(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("poly-bernoulli-stirling-sum", self.params_with_k());
        'outer: for k in self.k_range() {
            let gf = &self.poly_numbers[&k];
            let explicit = &self.poly_numbers_sum[&k];
            for n in 0..=self.order {
                if !b.require(format!("k={k}, n={n}"), &gf[n], &explicit[n]) {
                    break 'outer;
                }
            }
        }
        b.finish()
    }

    /// Iterated-integral route vs the generating-function route (k ≥ 2).
    pub fn poly_bernoulli_integral(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("poly-bernoulli-integral", self.params_with_k());
        let ks: Vec<i32> = self.k_range().filter(|&k| k >= 2).collect();
        if ks.is_empty() {
            b.note("no k >= 2 in the configured range".to_string());
            return b.finish();
        }
        'outer: for k in ks {
            let integral =
                poly_bernoulli_integral_table(k, &self.lambda, self.order).expect("k >= 2 checked");
            let gf = &self.poly_numbers[&k];
            for n in 0..=self.order {
                if !b.require(format!("k={k}, n={n}"), &integral[n], &gf[n]) {
                    break 'outer;
                }
            }
        }
        b.finish()
    }

    /// β⁽¹⁾_{n,λ} = (−1)ⁿ·β_{n,λ}, with the Carlitz numbers from their own
    /// series division.
    pub fn poly_bernoulli_order_one(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("poly-bernoulli-order-one", self.params_plain());
        let gf = &self.poly_numbers[&1];
        for n in 0..=self.order {
            let signed = if n % 2 == 0 {
                self.carlitz[n].clone()
            } else {
                -self.carlitz[n].clone()
            };
            if !b.require(format!("n={n}"), &gf[n], &signed) {
                break;
            }
        }
        b.finish()
    }

    /// The k = 2 convolution, in both displayed orderings:
    /// β⁽²⁾_{n,λ} = (−1)ⁿ Σ_m C(n,m)·β_{m,λ}·β_{n−m,λ}(1−λ)/(n−m+1)
    ///            = (−1)ⁿ Σ_m C(n,m)·β_{n−m,λ}·β_{m,λ}(1−λ)/(m+1).
    pub fn poly_bernoulli_convolution(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("poly-bernoulli-convolution", self.params_plain());
        let gf = &self.poly_numbers[&2];
        for n in 0..=self.order {
            let mut first = R::zero();
            let mut second = R::zero();
            for m in 0..=n {
                let weight = R::from_rational(&binomial_rat(n as u64, m as u64));
                let tail = Rational::from_int((n - m) as i64 + 1).recip();
                let head = Rational::from_int(m as i64 + 1).recip();
                first = first
                    + &(weight.clone()
                        * &self.carlitz[m]
                        * &self.carlitz_shifted[n - m]
                        * &R::from_rational(&tail));
                second = second
                    + &(weight
                        * &self.carlitz[n - m]
                        * &self.carlitz_shifted[m]
                        * &R::from_rational(&head));
            }
            if n % 2 == 1 {
                first = -first;
                second = -second;
            }
            if !b.require(format!("first ordering, n={n}"), &gf[n], &first) {
                break;
            }
            if !b.require(format!("second ordering, n={n}"), &gf[n], &second) {
                break;
            }
        }
        b.finish()
    }

    /// The multinomial composition formula over weak compositions of n into
    /// k parts, enumerated exhaustively within the configured budget.
    pub fn poly_bernoulli_multinomial(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("poly-bernoulli-multinomial", self.params_with_k());
        'outer: for k in 1..=self.k_max.max(1) {
            let gf = &self.poly_numbers[&k];
            for n in 0..=self.order {
                let compositions = binomial(n as u64 + k as u64 - 1, k as u64 - 1);
                if compositions > self.budget.into() {
                    b.note(format!(
                        "k={k}: skipped n>={n} ({compositions} compositions exceed budget {})",
                        self.budget
                    ));
                    break;
                }
                let mut sum = R::zero();
                let mut parts = vec![0usize; k as usize];
                self.multinomial_sum(n, 0, n, &mut parts, &mut sum);
                if n % 2 == 1 {
                    sum = -sum;
                }
                if !b.require(format!("k={k}, n={n}"), &gf[n], &sum) {
                    break 'outer;
                }
            }
        }
        b.finish()
    }

    fn multinomial_sum(
        &self,
        n_total: usize,
        index: usize,
        remaining: usize,
        parts: &mut Vec<usize>,
        acc: &mut R,
    ) {
        let last = parts.len() - 1;
        if index == last {
            parts[last] = remaining;
            let mut coeff = factorial_rat(n_total);
            for &p in parts.iter() {
                coeff /= factorial_rat(p);
            }
            let mut partial = 0usize;
            for &p in &parts[..last] {
                partial += p;
                coeff /= Rational::from_int(partial as i64 + 1);
            }
            let mut term = R::from_rational(&coeff);
            for &p in &parts[..last] {
                term = term * &self.carlitz_shifted[p];
            }
            term = term * &self.carlitz[parts[last]];
            let current = std::mem::replace(acc, R::zero());
            *acc = current + &term;
            return;
        }
        for value in 0..=remaining {
            parts[index] = value;
            self.multinomial_sum(n_total, index + 1, remaining - value, parts, acc);
        }
    }

    /// β⁽ᵏ⁾_{n,λ}(1) − β⁽ᵏ⁾_{n,λ} = (−1)ⁿ Σ_m ∏_{j<m}(λ−j)·S_{2,λ}(n,m)/m^(k−1).
    pub fn poly_bernoulli_difference(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("poly-bernoulli-difference", self.params_with_k());
        'outer: for k in self.k_range() {
            let at_one = self.poly_series[&k]
                .mul(&exp_series(&R::one(), &self.lambda, self.order).alternate_signs())
                .egf_values();
            let numbers = &self.poly_numbers[&k];
            for n in 1..=self.order {
                let lhs = at_one[n].clone() - &numbers[n];
                let mut rhs = R::zero();
                for m in 1..=n {
                    let term = self.lambda_product(m)
                        * &self.stirling2.value(n, m)
                        * &R::from_rational(&integer_power(m as u64, 1 - k));
                    rhs = rhs + &term;
                }
                if n % 2 == 1 {
                    rhs = -rhs;
                }
                if !b.require(format!("k={k}, n={n}"), &lhs, &rhs) {
                    break 'outer;
                }
            }
        }
        b.finish()
    }

    /// (−1)^(n−1) Σ_m ∏_{j<m}(λ−j)·S_{2,λ}(n,m) = δ_{n,1}.
    pub fn stirling2_delta(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("stirling2-delta", self.params_plain());
        for n in 1..=self.order {
            let mut sum = R::zero();
            for m in 1..=n {
                sum = sum + &(self.lambda_product(m) * &self.stirling2.value(n, m));
            }
            if n % 2 == 0 {
                sum = -sum;
            }
            let expected = if n == 1 { R::one() } else { R::zero() };
            if !b.require(format!("n={n}"), &sum, &expected) {
                break;
            }
        }
        b.finish()
    }

    /// The three routes to the degenerate Stirling-1 triangle agree
    /// entrywise: generating function, triangle recurrence, basis expansion.
    pub fn deg_stirling1_recurrence(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("deg-stirling1-recurrence", self.params_plain());
        'outer: for n in 0..=self.order {
            for k in 0..=n {
                if !b.require(
                    format!("recurrence route at (n,k)=({n},{k})"),
                    &self.stirling1_recurrence.value(n, k),
                    &self.stirling1.value(n, k),
                ) {
                    break 'outer;
                }
                if !b.require(
                    format!("expansion route at (n,k)=({n},{k})"),
                    &self.stirling1_expansion.value(n, k),
                    &self.stirling1.value(n, k),
                ) {
                    break 'outer;
                }
            }
        }
        b.finish()
    }

    /// Denominator-cleared inversion identity:
    /// (n+1)ᵏ·Σ_m (−1)^m·β⁽ᵏ⁾_{m,λ}·S_{1,λ}(n,m) = ∏_{j=1}^n (λ−j).
    /// Where the right-hand product is invertible the divided form
    /// Σ/∏ = (n+1)^(−k) is verified as well; where it vanishes (integer λ
    /// between 1 and n) the divided form is reported as undefined.
    pub fn reciprocal_power_inversion(&self) -> IdentityCheck {
        let mut b = CheckBuilder::new("reciprocal-power-inversion", self.params_with_k());
        let mut undefined_noted = false;
        'outer: for k in self.k_range() {
            let numbers = &self.poly_numbers[&k];
            for n in 0..=self.order {
                let mut sum = R::zero();
                for m in 0..=n {
                    let term = numbers[m].clone() * &self.stirling1.value(n, m);
                    if m % 2 == 0 {
                        sum = sum + &term;
                    } else {
                        sum = sum - &term;
                    }
                }
                let cleared = sum.clone() * &R::from_rational(&integer_power(n as u64 + 1, k));
                let product = self.lambda_product(n + 1); // ∏_{j=1}^{n}(λ−j)
                if !b.require(format!("cleared form, k={k}, n={n}"), &cleared, &product) {
                    break 'outer;
                }
                match product.try_invert() {
                    Some(inverse) => {
                        let divided = sum * &inverse;
                        let expected = R::from_rational(&integer_power(n as u64 + 1, -k));
                        if !b.require(format!("divided form, k={k}, n={n}"), &divided, &expected) {
                            break 'outer;
                        }
                    }
                    None => {
                        if product.is_zero() && !undefined_noted {
                            b.note(format!(
                                "divided form undefined at lambda={} (prefactor vanishes from n={n})",
                                self.label
                            ));
                            undefined_noted = true;
                        }
                    }
                }
            }
        }
        b.finish()
    }
}

/// Classical alternating factorial sum:
/// Σ_{m=1}^n (−1)^(n−m)·(m−1)!·S₂(n,m) = 1 at n = 1 and 0 for n ≥ 2.
/// λ-independent, so it runs once per suite.
pub fn classical_stirling_delta(order: usize) -> IdentityCheck {
    let mut b = CheckBuilder::new("classical-stirling-delta", format!("order={order}"));
    let table = stirling2_table(order);
    for n in 1..=order {
        let mut sum = Rational::zero();
        for m in 1..=n {
            let term = factorial_rat(m - 1) * table.value(n, m);
            if (n - m) % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let expected = if n == 1 {
            Rational::one()
        } else {
            Rational::zero()
        };
        if !b.require(format!("n={n}"), &sum, &expected) {
            break;
        }
    }
    b.finish()
}
