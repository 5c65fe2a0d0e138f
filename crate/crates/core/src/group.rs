//! Exact arithmetic for the four group families.
//!
//! Elements are plain integer indices:
//!
//! * cyclic `C_n` and semiprime `Z_pq`: the residue `k` stands for `g^k`;
//! * dihedral `D_2n`: `i` is the rotation `a^i`, `n + i` is the reflection `a^i b`;
//! * dicyclic `Q_4n`: `i < 2n` is `a^i`, `2n + i` is `a^i b`.
//!
//! Index `0` is always the identity.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cyclic,
    Dihedral,
    Dicyclic,
    #[serde(rename = "semiprime")]
    SemiprimeCyclic,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
            Family::SemiprimeCyclic => "semiprime",
        }
    }

    /// Smallest admissible `n` for the family (semiprime has no `n` parameter
    /// of its own; its smallest order is 6).
    pub fn min_n(self) -> usize {
        match self {
            Family::Cyclic => 2,
            Family::Dihedral => 3,
            Family::Dicyclic => 2,
            Family::SemiprimeCyclic => 6,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cyclic" | "c" => Ok(Family::Cyclic),
            "dihedral" | "d" => Ok(Family::Dihedral),
            "dicyclic" | "q" => Ok(Family::Dicyclic),
            "semiprime" | "zpq" => Ok(Family::SemiprimeCyclic),
            other => Err(Error::domain(format!("unknown family '{other}'"))),
        }
    }
}

/// A group element, identified by its index in the family encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(usize);

impl Element {
    pub const IDENTITY: Element = Element(0);

    pub fn index(self) -> usize {
        self.0
    }
}

/// One member of one of the four supported families, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: Family,
    n: usize,
    primes: Option<(usize, usize)>,
}

impl GroupSpec {
    pub fn cyclic(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("cyclic group needs n >= 2, got {n}")));
        }
        Ok(GroupSpec { family: Family::Cyclic, n, primes: None })
    }

    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!("dihedral group needs n >= 3, got {n}")));
        }
        Ok(GroupSpec { family: Family::Dihedral, n, primes: None })
    }

    pub fn dicyclic(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("dicyclic group needs n >= 2, got {n}")));
        }
        Ok(GroupSpec { family: Family::Dicyclic, n, primes: None })
    }

    pub fn semiprime(p: usize, q: usize) -> Result<Self> {
        if !is_prime(p) || !is_prime(q) {
            return Err(Error::domain(format!("semiprime group needs primes, got p={p}, q={q}")));
        }
        if p == q {
            return Err(Error::domain(format!("semiprime group needs p != q, got p=q={p}")));
        }
        Ok(GroupSpec { family: Family::SemiprimeCyclic, n: p * q, primes: Some((p, q)) })
    }

    /// Builds a spec from a family and its integer parameter(s); `p`/`q` are
    /// only read for the semiprime family.
    pub fn from_parts(family: Family, n: Option<usize>, p: Option<usize>, q: Option<usize>) -> Result<Self> {
        match family {
            Family::SemiprimeCyclic => match (p, q) {
                (Some(p), Some(q)) => GroupSpec::semiprime(p, q),
                _ => Err(Error::domain("semiprime family needs both p and q")),
            },
            _ => {
                let n = n.ok_or_else(|| Error::domain(format!("{family} family needs n")))?;
                match family {
                    Family::Cyclic => GroupSpec::cyclic(n),
                    Family::Dihedral => GroupSpec::dihedral(n),
                    _ => GroupSpec::dicyclic(n),
                }
            }
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The family parameter: `n` for cyclic/dihedral/dicyclic, `pq` for semiprime.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn primes(&self) -> Option<(usize, usize)> {
        self.primes
    }

    pub fn order(&self) -> usize {
        match self.family {
            Family::Cyclic | Family::SemiprimeCyclic => self.n,
            Family::Dihedral => 2 * self.n,
            Family::Dicyclic => 4 * self.n,
        }
    }

    /// Order of the rotation `a` (equal to the group order for cyclic groups).
    pub fn rotation_order(&self) -> usize {
        match self.family {
            Family::Cyclic | Family::SemiprimeCyclic | Family::Dihedral => self.n,
            Family::Dicyclic => 2 * self.n,
        }
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn element(&self, index: usize) -> Result<Element> {
        if index < self.order() {
            Ok(Element(index))
        } else {
            Err(Error::InvalidElement { index, order: self.order() })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order()).map(Element)
    }

    /// `a^i`, exponent reduced modulo the rotation order.
    pub fn rotation(&self, i: usize) -> Element {
        Element(i % self.rotation_order())
    }

    /// `a^i b`; only defined for dihedral and dicyclic groups.
    pub fn reflection(&self, i: usize) -> Result<Element> {
        match self.family {
            Family::Dihedral | Family::Dicyclic => {
                let r = self.rotation_order();
                Ok(Element(r + i % r))
            }
            _ => Err(Error::domain(format!("{} group has no element a^i b", self.family))),
        }
    }

    fn check(&self, a: Element) -> Result<()> {
        if a.0 < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidElement { index: a.0, order: self.order() })
        }
    }

    /// Splits an element into `(i, s)` meaning `a^i b^s`, `s ∈ {0, 1}`.
    fn normal_form(&self, a: Element) -> (usize, bool) {
        let r = self.rotation_order();
        if a.0 < r {
            (a.0, false)
        } else {
            (a.0 - r, true)
        }
    }

    pub fn multiply(&self, a: Element, b: Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: Element, b: Element) -> Element {
        match self.family {
            Family::Cyclic | Family::SemiprimeCyclic => Element((a.0 + b.0) % self.n),
            Family::Dihedral | Family::Dicyclic => {
                let r = self.rotation_order();
                let (i, sa) = self.normal_form(a);
                let (j, sb) = self.normal_form(b);
                // b a^j = a^{-j} b in both presentations.
                let exp = if sa { (i + r - j) % r } else { (i + j) % r };
                match (sa, sb) {
                    (false, false) => Element(exp),
                    (false, true) | (true, false) => Element(r + exp),
                    (true, true) => {
                        // b^2 = e (dihedral) or b^2 = a^n (dicyclic)
                        let shift = if self.family == Family::Dicyclic { self.n } else { 0 };
                        Element((exp + shift) % r)
                    }
                }
            }
        }
    }

    /// `a^k` by square-and-multiply; `k = 0` gives the identity.
    pub fn power(&self, a: Element, mut k: u64) -> Result<Element> {
        self.check(a)?;
        let mut base = a;
        let mut acc = Element::IDENTITY;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_unchecked(acc, base);
            }
            base = self.mul_unchecked(base, base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Least `k >= 1` with `a^k = e`.
    pub fn elem_order(&self, a: Element) -> Result<usize> {
        self.check(a)?;
        let mut cur = a;
        let mut k = 1;
        while cur != Element::IDENTITY {
            cur = self.mul_unchecked(cur, a);
            k += 1;
        }
        Ok(k)
    }

    /// The cyclic subgroup `⟨a⟩`, listed as `a, a^2, …, a^{o(a)} = e`.
    pub fn cyclic_subgroup(&self, a: Element) -> Result<Vec<Element>> {
        self.check(a)?;
        let mut out = vec![a];
        let mut cur = a;
        while cur != Element::IDENTITY {
            cur = self.mul_unchecked(cur, a);
            out.push(cur);
        }
        Ok(out)
    }

    /// Human-readable name of an element: `e`, `g^k`, `a^i`, `a^i b`.
    pub fn label(&self, a: Element) -> String {
        if a == Element::IDENTITY {
            return "e".to_string();
        }
        match self.family {
            Family::Cyclic | Family::SemiprimeCyclic => format!("g^{}", a.0),
            _ => match self.normal_form(a) {
                (i, false) => format!("a^{i}"),
                (0, true) => "b".to_string(),
                (i, true) => format!("a^{i}b"),
            },
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.family {
            Family::Cyclic => write!(f, "C_{}", self.n),
            Family::Dihedral => write!(f, "D_{}", 2 * self.n),
            Family::Dicyclic => write!(f, "Q_{}", 4 * self.n),
            Family::SemiprimeCyclic => {
                let (p, q) = self.primes.unwrap_or((0, 0));
                write!(f, "Z_{}({p}x{q})", self.n)
            }
        }
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::domain("euler_phi(0) is undefined"));
    }
    Ok(factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// Generators of `C_n`: residues `k` in `[1, n)` coprime to `n`.
pub fn cyclic_generators(n: usize) -> Result<Vec<Element>> {
    if n < 2 {
        return Err(Error::domain(format!("cyclic_generators needs n >= 2, got {n}")));
    }
    Ok((1..n).filter(|&k| gcd(k, n) == 1).map(Element).collect())
}

/// `Some((p, m))` when `n = p^m` for a prime `p`.
pub fn prime_power_decompose(n: usize) -> Option<(usize, u32)> {
    match factorize(n).as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}
