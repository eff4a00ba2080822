use crate::catalog::Catalog;
use crate::error::{Error, Result};

use super::{hom_dim, is_sum_of, Representation, DEFAULT_SEARCH_CAP};

/// Splits `y` into catalog entries, returned as a sorted multiset of indices.
///
/// Candidates are multisets whose dimension vectors add up to `dim y` and
/// whose Hom-dimensions from every catalog entry match those of `y`; the
/// first candidate for which an isomorphism onto `y` can be assembled wins.
pub fn decompose(y: &Representation, cat: &Catalog) -> Result<Vec<usize>> {
    if y.is_zero() {
        return Ok(Vec::new());
    }
    let homs = cat.hom_dims()?;
    let target: Vec<usize> = cat.modules().map(|e| hom_dim(e, y)).collect::<Result<_>>()?;
    let mut search = Search {
        cat,
        y,
        homs,
        target: &target,
        mult: vec![0; cat.len()],
        found: None,
    };
    let remaining = y.dims().to_vec();
    let acc = vec![0usize; cat.len()];
    search.run(0, remaining, acc)?;
    match search.found {
        Some(mult) => Ok(mult
            .iter()
            .enumerate()
            .flat_map(|(k, &m)| std::iter::repeat_n(k, m))
            .collect()),
        None => Err(Error::NotInCatalog(format!(
            "no multiset of catalog entries matches dimension vector {:?}",
            y.dims()
        ))),
    }
}

struct Search<'a> {
    cat: &'a Catalog,
    y: &'a Representation,
    homs: &'a [Vec<usize>],
    target: &'a [usize],
    mult: Vec<usize>,
    found: Option<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, remaining: Vec<usize>, acc: Vec<usize>) -> Result<()> {
        if self.found.is_some() {
            return Ok(());
        }
        if remaining.iter().all(|&d| d == 0) {
            if acc == self.target {
                let parts: Vec<&Representation> = self
                    .mult
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &m)| std::iter::repeat_n(self.cat.module(i), m))
                    .collect();
                if is_sum_of(&parts, self.y, DEFAULT_SEARCH_CAP)? {
                    self.found = Some(self.mult.clone());
                }
            }
            return Ok(());
        }
        if k == self.cat.len() {
            return Ok(());
        }
        let dims = self.cat.module(k).dims();
        let max = dims
            .iter()
            .zip(&remaining)
            .filter(|(&d, _)| d > 0)
            .map(|(&d, &r)| r / d)
            .min()
            .unwrap_or(0);
        for m in (0..=max).rev() {
            let rem: Vec<usize> = remaining.iter().zip(dims).map(|(&r, &d)| r - m * d).collect();
            let acc2: Vec<usize> = acc
                .iter()
                .enumerate()
                .map(|(i, &a)| a + m * self.homs[i][k])
                .collect();
            if acc2.iter().zip(self.target).any(|(a, t)| a > t) {
                continue;
            }
            self.mult[k] = m;
            self.run(k + 1, rem, acc2)?;
            self.mult[k] = 0;
            if self.found.is_some() {
                break;
            }
        }
        Ok(())
    }
}
