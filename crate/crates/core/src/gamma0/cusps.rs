//! Cusps of `Γ0(N)`: enumeration, equivalence and widths.

use std::fmt;

use num_integer::Integer;

/// A cusp `a/c` with `gcd(a, c) = 1` and `c ≥ 0`; infinity is `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cusp {
    pub numer: i64,
    pub denom: i64,
}

impl Cusp {
    pub fn infinity() -> Self {
        Cusp { numer: 1, denom: 0 }
    }

    /// `a/c` in lowest terms with a nonnegative denominator.
    pub fn new(a: i64, c: i64) -> Self {
        if c == 0 {
            return Cusp::infinity();
        }
        let g = a.gcd(&c);
        let (mut a, mut c) = (a / g, c / g);
        if c < 0 {
            a = -a;
            c = -c;
        }
        Cusp { numer: a, denom: c }
    }

    pub fn is_infinity(&self) -> bool {
        self.denom == 0
    }

    /// Width `N / gcd(c², N)` on `Γ0(N)`.
    pub fn width(&self, level: i64) -> i64 {
        level / (self.denom * self.denom).gcd(&level)
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "∞")
        } else if self.numer == 0 {
            write!(f, "0")
        } else if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl std::str::FromStr for Cusp {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Cusp> {
        let s = s.trim();
        if matches!(s, "∞" | "oo" | "inf" | "infinity") {
            return Ok(Cusp::infinity());
        }
        let bad = || crate::Error::InvalidArgument(format!("cannot parse cusp `{s}`"));
        match s.split_once('/') {
            Some((a, c)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let c: i64 = c.trim().parse().map_err(|_| bad())?;
                if a == 0 && c == 0 {
                    return Err(bad());
                }
                Ok(Cusp::new(a, c))
            }
            None => Ok(Cusp::new(s.parse().map_err(|_| bad())?, 1)),
        }
    }
}

/// An integer `2×2` matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Matrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2 {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// The fractional linear action on `Q ∪ {∞}`.
    pub fn act(&self, r: Cusp) -> Cusp {
        let (p, q) = (r.numer, r.denom);
        Cusp::new(self.a * p + self.b * q, self.c * p + self.d * q)
    }

    pub fn in_gamma0(&self, level: i64) -> bool {
        self.det() == 1 && self.c % level == 0
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A matrix of `SL2(Z)` sending `∞` to `r`: first column `(a, c)`.
pub fn cusp_matrix(r: Cusp) -> Matrix2 {
    if r.is_infinity() {
        return Matrix2::IDENTITY;
    }
    let e = r.numer.extended_gcd(&r.denom);
    // a·x + c·y = 1, so [[a, −y], [c, x]] has determinant 1
    let (x, y) = if e.gcd < 0 { (-e.x, -e.y) } else { (e.x, e.y) };
    Matrix2::new(r.numer, -y, r.denom, x)
}

fn units(level: i64) -> Vec<i64> {
    (1..=level.max(1)).filter(|s| s.gcd(&level) == 1).collect()
}

fn inverse_mod(s: i64, level: i64) -> i64 {
    let e = s.extended_gcd(&level);
    e.x.rem_euclid(level)
}

/// Whether `r1` and `r2` are equivalent under `Γ0(N)`: some `n` and unit
/// `s` give `(a', c') ≡ (s⁻¹a + nc, sc) (mod N)`, up to the sign of
/// `(a', c')`.
pub fn cusp_equivalent(level: i64, r1: Cusp, r2: Cusp) -> bool {
    if level == 1 {
        return true;
    }
    let (a, c) = (r1.numer, r1.denom);
    for (a2, c2) in [(r2.numer, r2.denom), (-r2.numer, -r2.denom)] {
        for s in units(level) {
            if (c2 - s * c).rem_euclid(level) != 0 {
                continue;
            }
            let s_inv = inverse_mod(s, level);
            for n in 0..level {
                if (a2 - s_inv * a - n * c).rem_euclid(level) == 0 {
                    return true;
                }
            }
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CuspEntry {
    /// Display form: `∞` for `c = N`, `0` for `c = 1`, otherwise `a/c`.
    pub cusp: Cusp,
    /// The enumerated representative `a/c` with `c | N` and smallest `a`.
    pub representative: Cusp,
    pub width: i64,
}

/// One representative per cusp class of `Γ0(N)`, ordered by denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspTable {
    pub level: i64,
    pub entries: Vec<CuspEntry>,
}

impl CuspTable {
    pub fn cusps(&self) -> impl Iterator<Item = Cusp> + '_ {
        self.entries.iter().map(|e| e.cusp)
    }

    /// The table entry whose class contains `r`.
    pub fn class_of(&self, r: Cusp) -> Option<&CuspEntry> {
        self.entries
            .iter()
            .find(|e| cusp_equivalent(self.level, r, e.representative))
    }

    pub fn width_sum(&self) -> i64 {
        self.entries.iter().map(|e| e.width).sum()
    }
}

impl fmt::Display for CuspTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cusps of Gamma0({})", self.level)?;
        writeln!(f, "{:<8} {:<10} {}", "cusp", "rep", "width")?;
        for e in &self.entries {
            writeln!(
                f,
                "{:<8} {:<10} {}",
                e.cusp.to_string(),
                format!("{}/{}", e.representative.numer, e.representative.denom),
                e.width
            )?;
        }
        Ok(())
    }
}

/// Enumerates `a/c` with `0 < c | N`, `0 < a ≤ N`, `gcd(a, N) = 1`, one `a`
/// per residue class modulo `gcd(c, N/c)`.
pub fn cusp_set(level: i64) -> CuspTable {
    assert!(level >= 1, "level must be positive");
    let mut entries = Vec::new();
    for c in (1..=level).filter(|c| level % c == 0) {
        let m = c.gcd(&(level / c));
        let mut seen = Vec::new();
        for a in units(level) {
            let class = a % m;
            if seen.contains(&class) {
                continue;
            }
            seen.push(class);
            let representative = Cusp::new(a, c);
            let cusp = if c == level {
                Cusp::infinity()
            } else if c == 1 {
                Cusp::new(0, 1)
            } else {
                representative
            };
            entries.push(CuspEntry {
                cusp,
                representative,
                width: representative.width(level),
            });
        }
    }
    CuspTable { level, entries }
}

/// `ψ(N) = N Π_{p|N} (1 + 1/p)`, the index of `Γ0(N)` in `SL2(Z)`.
pub fn psi(level: i64) -> i64 {
    let mut n = level;
    let mut out = level;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out = out / p * (p + 1);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out = out / n * (n + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_phi(n: i64) -> i64 {
        (1..=n).filter(|k| k.gcd(&n) == 1).count() as i64
    }

    #[test]
    fn level_14() {
        let t = cusp_set(14);
        let got: Vec<_> = t.entries.iter().map(|e| (e.cusp.to_string(), e.width)).collect();
        assert_eq!(
            got,
            vec![
                ("0".to_string(), 14),
                ("1/2".to_string(), 7),
                ("1/7".to_string(), 2),
                ("∞".to_string(), 1)
            ]
        );
    }

    #[test]
    fn level_28() {
        let t = cusp_set(28);
        let got: Vec<_> = t.cusps().map(|c| c.to_string()).collect();
        assert_eq!(got, vec!["0", "1/2", "1/4", "1/7", "1/14", "∞"]);
    }

    #[test]
    fn level_1() {
        let t = cusp_set(1);
        assert_eq!(t.entries.len(), 1);
        assert!(t.entries[0].cusp.is_infinity());
        assert_eq!(t.entries[0].width, 1);
    }

    #[test]
    fn counts_and_widths() {
        for n in 1..=60 {
            let t = cusp_set(n);
            let expected: i64 = (1..=n)
                .filter(|c| n % c == 0)
                .map(|c| euler_phi(c.gcd(&(n / c))))
                .sum();
            assert_eq!(t.entries.len() as i64, expected, "N = {n}");
            assert_eq!(t.width_sum(), psi(n), "N = {n}");
        }
    }

    #[test]
    fn representatives_pairwise_inequivalent() {
        for n in [6, 8, 9, 12, 14, 16, 18, 24, 28, 36] {
            let t = cusp_set(n);
            for (i, x) in t.entries.iter().enumerate() {
                for (j, y) in t.entries.iter().enumerate() {
                    assert_eq!(
                        cusp_equivalent(n, x.representative, y.representative),
                        i == j,
                        "N = {n}: {} vs {}",
                        x.representative,
                        y.representative
                    );
                    assert!(cusp_equivalent(n, x.cusp, x.representative));
                }
            }
        }
    }

    /// Every fraction a/c with small c lands in exactly one class, and
    /// applying an element of Γ0(N) never changes the class.
    #[test]
    fn classes_are_stable_under_gamma0() {
        let n = 28;
        let t = cusp_set(n);
        let gens = [
            Matrix2::new(1, 1, 0, 1),
            Matrix2::new(3, 1, 56, 19),
            Matrix2::new(3, 2, 28, 19),
            Matrix2::new(1, 0, 28, 1),
        ];
        for g in &gens {
            assert!(g.in_gamma0(n), "{g}");
        }
        for c in 0..40 {
            for a in -20..20i64 {
                if a.gcd(&c) != 1 {
                    continue;
                }
                let r = Cusp::new(a, c);
                let hits = t.entries.iter().filter(|e| cusp_equivalent(n, r, e.representative)).count();
                assert_eq!(hits, 1, "{r}");
                let home = t.class_of(r).unwrap().cusp;
                for g in &gens {
                    assert_eq!(t.class_of(g.act(r)).unwrap().cusp, home);
                }
            }
        }
    }

    #[test]
    fn alpha_equivalences_level_28() {
        let alpha = Matrix2::new(1, 0, 14, 1);
        let t = cusp_set(28);
        let image = |r: Cusp| t.class_of(alpha.act(r)).unwrap().cusp.to_string();
        assert_eq!(image(Cusp::new(0, 1)), "0");
        assert_eq!(image(Cusp::new(1, 2)), "1/4");
        assert_eq!(image(Cusp::new(1, 4)), "1/2");
        assert_eq!(image(Cusp::new(1, 7)), "1/7");
        assert_eq!(image(Cusp::new(1, 14)), "∞");
        assert_eq!(image(Cusp::infinity()), "1/14");
        assert!(cusp_equivalent(28, Cusp::new(1, 2), Cusp::new(1, 2)));
    }

    #[test]
    fn matrices_for_cusps() {
        assert_eq!(cusp_matrix(Cusp::new(1, 2)), Matrix2::new(1, 0, 2, 1));
        assert_eq!(cusp_matrix(Cusp::infinity()), Matrix2::IDENTITY);
        assert_eq!(cusp_matrix(Cusp::new(0, 1)), Matrix2::new(0, -1, 1, 0));
        for (a, c) in [(3, 7), (-5, 12), (1, 14), (13, 28)] {
            let m = cusp_matrix(Cusp::new(a, c));
            assert_eq!(m.det(), 1);
            assert_eq!(m.act(Cusp::infinity()), Cusp::new(a, c));
        }
    }

    #[test]
    fn parse_cusps() {
        assert_eq!("1/2".parse::<Cusp>().unwrap(), Cusp::new(1, 2));
        assert_eq!("oo".parse::<Cusp>().unwrap(), Cusp::infinity());
        assert_eq!("0".parse::<Cusp>().unwrap(), Cusp::new(0, 1));
        assert!("x".parse::<Cusp>().is_err());
    }
}
