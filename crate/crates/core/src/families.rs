//! The family of an FS-double square: itself plus the α-, β- and γ-mates that
//! are handled together, split into segments of constant exponent type.

use alloc::vec::Vec;
use core::fmt;

use crate::doublesq::{find_fs_double_squares, FsDoubleSquare};
use crate::mates::{classify_mate, gamma_type, MateKind};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Alpha,
    AlphaBeta,
    AlphaBetaGamma,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Alpha => "alpha",
            FamilyKind::AlphaBeta => "alpha_beta",
            FamilyKind::AlphaBetaGamma => "alpha_beta_gamma",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    Alpha,
    Beta,
    Gamma,
}

impl SegmentKind {
    pub fn name(&self) -> &'static str {
        match self {
            SegmentKind::Alpha => "alpha_segment",
            SegmentKind::Beta => "beta_segment",
            SegmentKind::Gamma => "gamma_segment",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member<'a> {
    pub square: FsDoubleSquare<'a>,
    /// Relation to the family head; `None` for the head itself.
    pub mate: Option<MateKind>,
    /// Own exponents for α- and β-mates, the γ type for γ-mates.
    pub type_pair: (usize, usize),
}

impl Member<'_> {
    pub fn start(&self) -> usize {
        self.square.start()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub type_pair: (usize, usize),
    /// Indices into [`Family::members`].
    pub members: Vec<usize>,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family<'a> {
    pub kind: FamilyKind,
    pub members: Vec<Member<'a>>,
    pub segments: Vec<Segment>,
}

impl<'a> Family<'a> {
    pub fn head(&self) -> &FsDoubleSquare<'a> {
        &self.members[0].square
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn starts(&self) -> Vec<usize> {
        self.members.iter().map(Member::start).collect()
    }

    pub fn segment_count(&self, kind: SegmentKind) -> usize {
        self.segments.iter().filter(|s| s.kind == kind).count()
    }
}

fn segment_kind(mate: Option<MateKind>) -> SegmentKind {
    match mate {
        Some(MateKind::Beta) => SegmentKind::Beta,
        Some(MateKind::Gamma) => SegmentKind::Gamma,
        _ => SegmentKind::Alpha,
    }
}

/// Family of `fs[head]` among the FS-double squares `fs` of one host.
pub fn family_at<'a>(fs: &[FsDoubleSquare<'a>], head: usize) -> Result<Family<'a>> {
    let u = fs.get(head).ok_or(Error::NoDoubleSquare)?;
    let mut later = Vec::new();
    for v in &fs[head + 1..] {
        later.push((v, classify_mate(u, v)?));
    }
    let first_other = later.iter().find(|(_, k)| *k != MateKind::Alpha).map(|(_, k)| *k);
    let with_beta = first_other == Some(MateKind::Beta);

    let mut members = Vec::new();
    members.push(Member {
        square: u.clone(),
        mate: None,
        type_pair: u.factorization.exponents(),
    });
    let mut has_gamma = false;
    for (v, kind) in later {
        let type_pair = match kind {
            MateKind::Alpha => v.factorization.exponents(),
            MateKind::Beta if with_beta => v.factorization.exponents(),
            MateKind::Gamma if with_beta => {
                has_gamma = true;
                gamma_type(u, v)?
            }
            _ => continue,
        };
        members.push(Member {
            square: v.clone(),
            mate: Some(kind),
            type_pair,
        });
    }
    let kind = match (with_beta, has_gamma) {
        (false, _) => FamilyKind::Alpha,
        (true, false) => FamilyKind::AlphaBeta,
        (true, true) => FamilyKind::AlphaBetaGamma,
    };

    let mut segments: Vec<Segment> = Vec::new();
    for (i, m) in members.iter().enumerate() {
        let sk = segment_kind(m.mate);
        match segments.last_mut() {
            Some(s) if s.kind == sk && s.type_pair == m.type_pair => s.members.push(i),
            _ => segments.push(Segment {
                kind: sk,
                type_pair: m.type_pair,
                members: alloc::vec![i],
            }),
        }
    }
    Ok(Family {
        kind,
        members,
        segments,
    })
}

/// Family of the first FS-double square of `w`.
pub fn decompose_family(w: &[u8]) -> Result<Family<'_>> {
    let fs = find_fs_double_squares(w)?;
    family_at(&fs, 0)
}

/// The size bound matching the family's kind and type.
pub fn family_size_bound(f: &Family<'_>) -> usize {
    let fz = &f.head().factorization;
    let (p, q) = (fz.e1, fz.e2);
    let (a, b) = (fz.u1_len(), fz.u2_len());
    match f.kind {
        FamilyKind::Alpha if p == q => b,
        FamilyKind::Alpha => a - 1,
        FamilyKind::AlphaBeta => {
            let (lp, lq) = f.segments.last().map_or((p, q), |s| s.type_pair);
            if lp == lq {
                (p - q) / 2 * a + b
            } else if q == 1 {
                (p - q).div_ceil(2) * a
            } else {
                (p - q) * a / 2
            }
        }
        FamilyKind::AlphaBetaGamma => 2 * (p + 1) * a / 3,
    }
}

/// Families of successive heads: the first FS-double square, then the first
/// one not in the previous family, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyChain<'a> {
    pub families: Vec<Family<'a>>,
    /// Starts claimed by more than one family.
    pub overlaps: Vec<usize>,
}

pub fn successive_families<'a>(fs: &[FsDoubleSquare<'a>]) -> Result<FamilyChain<'a>> {
    let mut families: Vec<Family<'a>> = Vec::new();
    let mut claimed: Vec<usize> = Vec::new();
    let mut overlaps = Vec::new();
    let mut head = 0;
    while head < fs.len() {
        let fam = family_at(fs, head)?;
        for s in fam.starts() {
            match claimed.binary_search(&s) {
                Ok(_) => overlaps.push(s),
                Err(i) => claimed.insert(i, s),
            }
        }
        families.push(fam);
        match fs[head + 1..]
            .iter()
            .position(|d| claimed.binary_search(&d.start()).is_err())
        {
            Some(off) => head += 1 + off,
            None => break,
        }
    }
    overlaps.sort_unstable();
    overlaps.dedup();
    Ok(FamilyChain { families, overlaps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::construct::{FIGURE_2, FIGURE_3, FIGURE_4};

    #[test]
    fn figure2() {
        let x = FIGURE_2.word();
        let fam = decompose_family(&x).unwrap();
        assert_eq!(fam.kind, FamilyKind::Alpha);
        assert_eq!(fam.len(), 4);
        assert_eq!(fam.segments.len(), 1);
        assert_eq!(family_size_bound(&fam), 4);
    }

    #[test]
    fn figure3() {
        let x = FIGURE_3.word();
        let fam = decompose_family(&x).unwrap();
        assert_eq!(fam.kind, FamilyKind::Alpha);
        assert_eq!(fam.len(), 4);
        assert_eq!(family_size_bound(&fam), 5);
    }

    #[test]
    fn figure4() {
        let x = FIGURE_4.word();
        let fam = decompose_family(&x).unwrap();
        assert_eq!(fam.kind, FamilyKind::AlphaBeta);
        assert_eq!(fam.segment_count(SegmentKind::Alpha), 1);
        assert_eq!(fam.segment_count(SegmentKind::Beta), 2);
        assert!(fam.segments.iter().all(|s| s.len() <= 4));
        let types: Vec<_> = fam.segments.iter().map(|s| s.type_pair).collect();
        assert_eq!(types, [(5, 1), (4, 2), (3, 3)]);
        // last segment has equal exponents: (5-1)/2·6 + 4
        assert_eq!(family_size_bound(&fam), 16);
        assert!(fam.len() <= 12);
    }

    #[test]
    fn no_double_square() {
        assert_eq!(decompose_family(b"ab"), Err(Error::NoDoubleSquare));
        assert_eq!(Error::NoDoubleSquare.to_string(), "no double square");
    }

    #[test]
    fn chain_of_one() {
        let x = FIGURE_2.word();
        let fs = find_fs_double_squares(&x).unwrap();
        let chain = successive_families(&fs).unwrap();
        assert_eq!(chain.families.len(), 1);
        assert!(chain.overlaps.is_empty());
    }
}
