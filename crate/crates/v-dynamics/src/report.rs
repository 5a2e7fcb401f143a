//! Periodic-orbit reports read off a revealed tree pair.
//!
//! A revealed pair exposes three kinds of periodic behaviour: one repelling
//! periodic point per domain-side difference component, one attracting
//! periodic point per range-side component, and intervals of periodic points
//! for each cycle of the leaf bijection on common leaves.  The report lists
//! one record per orbit; `n_f` is the largest period among them.

use crate::pair::TreePair;
use crate::reveal::{reveal, Component, RevealOrder, RevealedPair};
use cantor_core::{Point, PointCoord, Word};
use nv_elements::Element;
use std::fmt;

/// The kind of periodic orbit a record describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrbitKind {
    /// Isolated repelling periodic orbit.
    Repelling,
    /// Isolated attracting periodic orbit.
    Attracting,
    /// A cycle of intervals on which the map's power acts as the identity:
    /// every point inside has this exact period.
    NeutralInterval,
}

/// One periodic orbit of the map described by a tree pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicRecord {
    pub kind: OrbitKind,
    pub period: usize,
    /// A point on the orbit: the isolated periodic point itself, or a
    /// representative inside the cycled interval.
    pub point: Point,
    /// For interval cycles, the interval addresses in orbit order starting
    /// from the smallest; empty for isolated orbits.
    pub cycle: Vec<Word>,
}

impl PeriodicRecord {
    fn from_component(comp: &Component, kind: OrbitKind, f: &Element) -> PeriodicRecord {
        let rel = comp
            .lambda
            .strip_prefix(&comp.root)
            .expect("orbit leaf lies strictly below the component root");
        let seed = Point::new(vec![PointCoord::new(comp.root.clone(), rel)]);
        PeriodicRecord {
            kind,
            period: comp.period(),
            point: least_orbit_point(f, &seed, comp.period()),
            cycle: Vec::new(),
        }
    }

    fn from_cycle(cycle: &[Word]) -> PeriodicRecord {
        let base = cycle.first().expect("cycles are nonempty");
        PeriodicRecord {
            kind: OrbitKind::NeutralInterval,
            period: cycle.len(),
            point: Point::new(vec![PointCoord::new(base.clone(), Word::from_bits([0]))]),
            cycle: cycle.to_vec(),
        }
    }

    fn sort_key(&self) -> (OrbitKind, usize, String, Vec<Word>) {
        (self.kind, self.period, self.point.to_string(), self.cycle.clone())
    }
}

/// The lexicographically least point on the orbit of `x` (of the given
/// period) under `f`: a representative independent of how the orbit was
/// found.
fn least_orbit_point(f: &Element, x: &Point, period: usize) -> Point {
    let mut best = x.clone();
    let mut y = x.clone();
    for _ in 1..period {
        y = f.apply(&y);
        if y < best {
            best = y.clone();
        }
    }
    best
}

fn cyclically_equal(a: &[Word], b: &[Word]) -> bool {
    a.len() == b.len()
        && !a.is_empty()
        && b.iter().enumerate().any(|(k, w)| {
            w == &a[0] && (0..a.len()).all(|i| a[i] == b[(k + i) % b.len()])
        })
}

fn rotate_to_least(mut cycle: Vec<Word>) -> Vec<Word> {
    let k = cycle
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle.rotate_left(k);
    cycle
}

/// Merges interval cycles up to their maximal form.  Whenever a cycle of
/// `0`-children runs in step with the cycle of their `1`-siblings, both are
/// the split of a cycle on the parent intervals; replacing them makes the
/// reported cycle system independent of how finely the pair was revealed.
fn merged_cycles(input: &[Vec<Word>]) -> Vec<Vec<Word>> {
    let mut cycles: Vec<Vec<Word>> = input.iter().map(|c| rotate_to_least(c.clone())).collect();
    'merge: loop {
        for i in 0..cycles.len() {
            if !cycles[i].iter().all(|w| w.last() == Some(0)) {
                continue;
            }
            let siblings: Vec<Word> = cycles[i]
                .iter()
                .map(|w| w.sibling().expect("nonempty words have siblings"))
                .collect();
            for j in 0..cycles.len() {
                if i != j && cyclically_equal(&cycles[j], &siblings) {
                    let parent: Vec<Word> = cycles[i]
                        .iter()
                        .map(|w| w.parent().expect("nonempty words have parents"))
                        .collect();
                    let (hi, lo) = (i.max(j), i.min(j));
                    cycles.remove(hi);
                    cycles.remove(lo);
                    cycles.push(rotate_to_least(parent));
                    continue 'merge;
                }
            }
        }
        break;
    }
    cycles.sort();
    cycles
}

impl fmt::Display for PeriodicRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrbitKind::Repelling => {
                write!(f, "repelling period={} point={}", self.period, self.point)
            }
            OrbitKind::Attracting => {
                write!(f, "attracting period={} point={}", self.period, self.point)
            }
            OrbitKind::NeutralInterval => {
                let bricks: Vec<String> = self
                    .cycle
                    .iter()
                    .map(|w| if w.is_empty() { "e".to_string() } else { w.to_string() })
                    .collect();
                write!(
                    f,
                    "neutral-interval period={} bricks={} point={}",
                    self.period,
                    bricks.join(","),
                    self.point
                )
            }
        }
    }
}

/// The full list of periodic orbits of a one-dimensional prefix-replacement
/// map, sorted deterministically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicsReport {
    records: Vec<PeriodicRecord>,
}

impl DynamicsReport {
    /// Reads the report off an already revealed pair.  Representatives are
    /// canonicalized (least point on each isolated orbit, maximally merged
    /// interval cycles) so that any revealed pair of the same map yields the
    /// same report.
    pub fn from_revealed(rev: &RevealedPair) -> DynamicsReport {
        let f = rev.pair().to_element();
        let mut records: Vec<PeriodicRecord> = rev
            .repelling_components()
            .iter()
            .map(|c| PeriodicRecord::from_component(c, OrbitKind::Repelling, &f))
            .chain(
                rev.attracting_components()
                    .iter()
                    .map(|c| PeriodicRecord::from_component(c, OrbitKind::Attracting, &f)),
            )
            .chain(
                merged_cycles(rev.neutral_cycles())
                    .iter()
                    .map(|c| PeriodicRecord::from_cycle(c)),
            )
            .collect();
        records.sort_by_key(|r| r.sort_key());
        DynamicsReport { records }
    }

    /// All orbit records.
    pub fn records(&self) -> &[PeriodicRecord] {
        &self.records
    }

    /// The largest period among the finite orbits of the map.
    pub fn n_f(&self) -> usize {
        self.records.iter().map(|r| r.period).max().unwrap_or(1)
    }

    /// One formatted line per record plus a closing period summary.
    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self.records.iter().map(|r| r.to_string()).collect();
        out.push(format!("max-period={}", self.n_f()));
        out
    }
}

impl fmt::Display for DynamicsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines().join("\n"))
    }
}

/// Reveals `pair` in the given order and reports its periodic orbits.
pub fn dynamics_report(pair: &TreePair, order: RevealOrder) -> DynamicsReport {
    DynamicsReport::from_revealed(&reveal(pair, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(s: &str) -> DynamicsReport {
        dynamics_report(&s.parse().unwrap(), RevealOrder::Standard)
    }

    #[test]
    fn order_preserving_shift_has_two_fixed_points() {
        let rep = report("D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11");
        assert_eq!(rep.n_f(), 1);
        let lines = rep.lines();
        assert_eq!(
            lines,
            vec![
                "repelling period=1 point=(0)",
                "attracting period=1 point=(1)",
                "max-period=1"
            ]
        );
    }

    #[test]
    fn shifted_bijection_swaps_the_halves_with_period_two() {
        // The revealed pair cycles 00 -> 10 and 01 -> 11; those sibling
        // cycles merge into the single parent cycle on the two halves.
        let rep = report("D: 00 01 1 | R: 0 10 11 | sigma: 00->10 01->11 1->0");
        assert_eq!(rep.n_f(), 2);
        assert_eq!(
            rep.lines(),
            vec!["neutral-interval period=2 bricks=0,1 point=(0)", "max-period=2"]
        );
    }

    #[test]
    fn identity_reports_one_fixed_interval() {
        let rep = report("D: e | R: e | sigma: e->e");
        assert_eq!(rep.n_f(), 1);
        assert_eq!(rep.lines(), vec!["neutral-interval period=1 bricks=e point=(0)", "max-period=1"]);
    }

    #[test]
    fn reports_agree_across_reveal_orders() {
        let pairs = [
            "D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11",
            "D: 00 01 1 | R: 0 10 11 | sigma: 00->10 01->11 1->0",
            "D: 000 001 01 1 | R: 0 10 110 111 | sigma: 000->110 001->0 01->111 1->10",
            "D: 00 01 10 11 | R: 00 01 10 11 | sigma: 00->01 01->10 10->11 11->00",
        ];
        for text in pairs {
            let p: TreePair = text.parse().unwrap();
            let std = dynamics_report(&p, RevealOrder::Standard);
            let alt = dynamics_report(&p, RevealOrder::Alternate);
            assert_eq!(std, alt, "orders disagree on {text}");
        }
    }

    #[test]
    fn four_cycle_reports_period_four() {
        let rep = report("D: 00 01 10 11 | R: 00 01 10 11 | sigma: 00->01 01->10 10->11 11->00");
        assert_eq!(rep.n_f(), 4);
        assert_eq!(rep.records().len(), 1);
        assert_eq!(rep.records()[0].cycle.len(), 4);
    }
}
