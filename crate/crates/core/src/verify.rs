//! Exhaustive invariant sweep over `S_n`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::crystal::{crystal_graph, is_highest_weight, lower, pair_row, raise};
use crate::keylab::{
    algorithm_d_tilde, decompose_unchecked, demazure_tableau_crystal, insertion_tableau,
    lifted_insertion, pi_r, truncating_permutation, CrystalComponent, Decomposition,
};
use crate::perm::{Composition, Permutation};
use crate::pipedream::{enumerate_rp, schubert_pipedreams, PipeDream};
use crate::poly::{key_polynomial, schubert_divdiff};
use crate::rfc::{
    enumerate_rfc, lower_rfc, pair_block, phi, phi_inverse, raise_rfc, schubert_compatible,
    schubert_rfc,
};

/// Property names, in report order.
pub const PROPERTIES: &[&str] = &[
    "schubert_methods_agree",
    "rp_rfc_bijection",
    "crystal_operators_inverse",
    "crystal_moves_are_chute_moves",
    "phi_intertwines_operators",
    "one_highest_weight_per_component",
    "highest_weight_shape",
    "insertion_rows_are_blocks",
    "d_tilde_matches_lift",
    "key_decomposition",
    "demazure_oracle",
    "crystal_key_decomposition",
];

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn alpha_shift(v: &Composition, i: usize, down: bool) -> Option<Composition> {
    if down {
        v.minus_simple_root(i)
    } else {
        v.plus_simple_root(i)
    }
}

pub fn schubert_methods_agree(w: &Permutation) -> Check {
    let reference = schubert_divdiff(w);
    for (name, p) in [
        ("pipedreams", schubert_pipedreams(w)),
        ("compatible", schubert_compatible(w)),
        ("rfc", schubert_rfc(w)),
    ] {
        ensure(p == reference, || {
            format!("{name} gives {p}, divided differences give {reference}")
        })?;
    }
    Ok(())
}

pub fn rp_rfc_bijection(w: &Permutation, rp: &[PipeDream]) -> Check {
    let rfcs: BTreeSet<_> = enumerate_rfc(&w.inverse()).into_iter().collect();
    let images: BTreeSet<_> = rp.iter().map(phi).collect();
    ensure(images.len() == rp.len(), || "phi is not injective".into())?;
    ensure(images == rfcs, || {
        "phi(RP(w)) differs from RFC(w^-1)".into()
    })?;
    for d in rp {
        let r = phi(d);
        ensure(phi_inverse(&r) == *d, || {
            format!("phi_inverse fails on {}", d.cross_list_string())
        })?;
        ensure(r.weight() == d.weight(), || {
            format!("phi changes the weight of {}", d.cross_list_string())
        })?;
    }
    Ok(())
}

pub fn crystal_operators_inverse(w: &Permutation, rp: &[PipeDream]) -> Check {
    let members: BTreeSet<&PipeDream> = rp.iter().collect();
    for d in rp {
        for i in 1..w.n() {
            for (down, image) in [(true, lower(d, i)), (false, raise(d, i))] {
                let Some(t) = image else { continue };
                let back = if down { raise(&t, i) } else { lower(&t, i) };
                let tag = if down { "f" } else { "e" };
                ensure(back.as_ref() == Some(d), || {
                    format!("{tag}_{i} not undone on {}", d.cross_list_string())
                })?;
                ensure(members.contains(&t), || {
                    format!("{tag}_{i} leaves RP(w) from {}", d.cross_list_string())
                })?;
                ensure(
                    Some(t.weight()) == alpha_shift(&d.weight(), i, down),
                    || {
                        format!(
                            "{tag}_{i} shifts the weight of {} wrongly",
                            d.cross_list_string()
                        )
                    },
                )?;
            }
        }
    }
    Ok(())
}

pub fn crystal_moves_are_chute_moves(w: &Permutation, rp: &[PipeDream]) -> Check {
    for d in rp {
        let chutes = d.general_chute_moves();
        for i in 1..w.n() {
            if let Some(t) = lower(d, i) {
                ensure(chutes.contains(&t), || {
                    format!("f_{i} on {} is not a chute move", d.cross_list_string())
                })?;
            }
        }
    }
    Ok(())
}

pub fn phi_intertwines_operators(w: &Permutation, rp: &[PipeDream]) -> Check {
    for d in rp {
        let r = phi(d);
        for i in 1..w.n() {
            ensure(lower(d, i).map(|t| phi(&t)) == lower_rfc(&r, i), || {
                format!("f_{i} and phi disagree on {}", d.cross_list_string())
            })?;
            ensure(raise(d, i).map(|t| phi(&t)) == raise_rfc(&r, i), || {
                format!("e_{i} and phi disagree on {}", d.cross_list_string())
            })?;
            if i + 1 < w.n() {
                let rows = pair_row(d, i);
                let blocks = pair_block(&r, i);
                let letter = |(a, b): (usize, usize)| a + b - 1;
                let mapped: Vec<(usize, usize)> = rows
                    .pairs
                    .iter()
                    .map(|&(u, l)| (letter(u), letter(l)))
                    .collect();
                ensure(mapped == blocks.pairs, || {
                    format!("pairings differ on row {i} of {}", d.cross_list_string())
                })?;
            }
        }
    }
    Ok(())
}

pub fn one_highest_weight_per_component(w: &Permutation) -> Check {
    let graph = crystal_graph(w);
    let comps = graph.components().map_err(|e| e.to_string())?;
    let index: HashMap<&PipeDream, usize> = graph
        .vertices
        .iter()
        .enumerate()
        .map(|(k, d)| (d, k))
        .collect();
    for c in comps {
        let mut seen = BTreeSet::from([c.highest]);
        let mut queue = VecDeque::from([c.highest]);
        while let Some(v) = queue.pop_front() {
            for i in 1..w.n() {
                if let Some(t) = lower(&graph.vertices[v], i) {
                    let k = index[&t];
                    if seen.insert(k) {
                        queue.push_back(k);
                    }
                }
            }
        }
        ensure(seen.len() == c.members.len(), || {
            format!(
                "only {} of {} members reachable by lowering from {}",
                seen.len(),
                c.members.len(),
                graph.vertices[c.highest].cross_list_string()
            )
        })?;
    }
    Ok(())
}

pub fn highest_weight_shape(hw: &[PipeDream]) -> Check {
    for d in hw {
        let id = d.cross_list_string();
        ensure(d.weight().is_partition(), || {
            format!("weight of {id} is not a partition")
        })?;
        let rows: Vec<Vec<usize>> = (1..=d.n()).map(|i| d.row(i)).collect();
        let longest = rows.iter().map(Vec::len).max().unwrap_or(0);
        for l in 0..longest {
            let cols: Vec<(usize, usize)> = rows
                .iter()
                .enumerate()
                .filter_map(|(k, r)| r.get(l).map(|&c| (k + 1, c)))
                .collect();
            ensure(cols.windows(2).all(|p| p[0].1 <= p[1].1), || {
                format!("cross {} columns decrease in {id}", l + 1)
            })?;
            ensure(
                cols.windows(2).all(|p| p[0].1 + p[0].0 < p[1].1 + p[1].0),
                || format!("shifted cross {} columns not increasing in {id}", l + 1),
            )?;
        }
        let r = phi(d);
        for l in 0.. {
            let letters: Vec<usize> = r
                .blocks()
                .iter()
                .filter_map(|b| b.get(l).copied())
                .collect();
            if letters.is_empty() {
                break;
            }
            ensure(letters.windows(2).all(|p| p[0] < p[1]), || {
                format!("letter {} of the blocks of {r} not increasing", l + 1)
            })?;
        }
    }
    Ok(())
}

pub fn insertion_rows_are_blocks(hw: &[PipeDream]) -> Check {
    for d in hw {
        let r = phi(d);
        let p = insertion_tableau(&r.reading_word());
        let blocks: Vec<Vec<usize>> = r
            .blocks()
            .iter()
            .filter(|b| !b.is_empty())
            .cloned()
            .collect();
        ensure(p.rows == blocks, || format!("P({r}) is not its blocks"))?;
    }
    Ok(())
}

pub fn d_tilde_matches_lift(hw: &[PipeDream]) -> Check {
    for d in hw {
        let id = d.cross_list_string();
        let r = phi(d);
        let filling = algorithm_d_tilde(d).map_err(|e| format!("{id}: {e}"))?;
        let lifted = lifted_insertion(&r).map_err(|e| format!("{r}: {e}"))?;
        ensure(filling == lifted, || {
            format!("D~ of {id} differs from lift(P({r}))")
        })?;
        let a = truncating_permutation(d).map_err(|e| e.to_string())?;
        let b = pi_r(&r).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("pi_D = {a} but pi_r = {b} for {id}"))?;
        let mut sorted = filling.weight(d.n()).parts().to_vec();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        ensure(sorted == d.weight().parts(), || {
            format!("wt(D~) is not a rearrangement of wt({id})")
        })?;
    }
    Ok(())
}

pub fn key_decomposition(w: &Permutation, dec: &Decomposition) -> Check {
    ensure(dec.verified(), || dec.to_json().to_string())?;
    ensure(dec.key_sum == schubert_divdiff(w), || {
        "sum of keys differs from divided differences".into()
    })
}

/// Compares each component with `B_pi(lambda)` in the tableau crystal:
/// weight multisets, arrow counts and characters.
fn compare_with_tableaux(
    dec: &Decomposition,
    pi_of: impl Fn(&CrystalComponent) -> Permutation,
) -> Check {
    let n = dec.w.n();
    let graph_edges: BTreeMap<usize, usize> =
        dec.graph.edges.iter().fold(BTreeMap::new(), |mut m, e| {
            *m.entry(e.source).or_default() += 1;
            m
        });
    let index: HashMap<&PipeDream, usize> = dec
        .graph
        .vertices
        .iter()
        .enumerate()
        .map(|(k, d)| (d, k))
        .collect();
    for c in &dec.components {
        let b = demazure_tableau_crystal(&c.lambda, &pi_of(c), n);
        let mut lhs: Vec<Composition> = c.members.iter().map(PipeDream::weight).collect();
        let mut rhs = b.weights();
        lhs.sort();
        rhs.sort();
        let id = c.highest.cross_list_string();
        ensure(lhs == rhs, || {
            format!("weights of the component of {id} differ from B_pi(lambda)")
        })?;
        let edges: usize = c
            .members
            .iter()
            .map(|d| graph_edges.get(&index[d]).copied().unwrap_or(0))
            .sum();
        ensure(edges == b.edge_count(), || {
            format!(
                "component of {id} has {edges} edges, B_pi(lambda) has {}",
                b.edge_count()
            )
        })?;
        ensure(b.character() == c.character, || {
            format!("character of B_pi(lambda) differs for {id}")
        })?;
    }
    Ok(())
}

pub fn demazure_oracle(dec: &Decomposition) -> Check {
    compare_with_tableaux(dec, |c| c.pi.clone())?;
    for c in &dec.components {
        ensure(c.character == c.key, || {
            format!(
                "character of {} is not the key of {}",
                c.highest.cross_list_string(),
                c.a
            )
        })?;
    }
    Ok(())
}

/// The key decomposition with `a_D` read off the crystal component
/// (its lowest extremal weight) instead of from `D~`.
pub fn crystal_key_decomposition(w: &Permutation, dec: &Decomposition) -> Check {
    for c in &dec.components {
        ensure(key_polynomial(&c.a_extremal) == c.character, || {
            format!(
                "character of {} is not the key of {}",
                c.highest.cross_list_string(),
                c.a_extremal
            )
        })?;
    }
    ensure(dec.extremal_key_sum() == schubert_divdiff(w), || {
        "sum of extremal keys differs from divided differences".into()
    })?;
    compare_with_tableaux(dec, CrystalComponent::pi_extremal)
}

/// Every property for one permutation, in [`PROPERTIES`] order.
pub fn check_permutation(w: &Permutation) -> Vec<(&'static str, Check)> {
    let rp = enumerate_rp(w);
    let hw: Vec<PipeDream> = rp
        .iter()
        .filter(|d| is_highest_weight(d))
        .cloned()
        .collect();
    let mut results = vec![
        schubert_methods_agree(w),
        rp_rfc_bijection(w, &rp),
        crystal_operators_inverse(w, &rp),
        crystal_moves_are_chute_moves(w, &rp),
        phi_intertwines_operators(w, &rp),
        one_highest_weight_per_component(w),
        highest_weight_shape(&hw),
        insertion_rows_are_blocks(&hw),
        d_tilde_matches_lift(&hw),
    ];
    match decompose_unchecked(w) {
        Ok(dec) => results.extend([
            key_decomposition(w, &dec),
            demazure_oracle(&dec),
            crystal_key_decomposition(w, &dec),
        ]),
        Err(e) => results.extend(std::iter::repeat_n(Err(e.to_string()), 3)),
    }
    PROPERTIES.iter().copied().zip(results).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub w: Permutation,
    pub property: &'static str,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub n: usize,
    pub permutations: usize,
    /// `(property, passed, failed)` in [`PROPERTIES`] order.
    pub tallies: Vec<(&'static str, usize, usize)>,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![format!(
            "n = {}: {} permutations",
            self.n, self.permutations
        )];
        for (name, pass, fail) in &self.tallies {
            lines.push(format!("{name:<36} pass {pass:>5}  fail {fail:>5}"));
        }
        lines.push(if self.all_passed() {
            "all properties pass".to_string()
        } else {
            format!("{} failures", self.failures.len())
        });
        lines.join("\n")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "permutations": self.permutations,
            "properties": self.tallies.iter().map(|(name, pass, fail)| json!({
                "name": name, "passed": pass, "failed": fail,
            })).collect::<Vec<_>>(),
            "failures": self.failures_json(),
        })
    }

    pub fn failures_json(&self) -> Value {
        Value::Array(
            self.failures
                .iter()
                .map(|f| {
                    let message = serde_json::from_str::<Value>(&f.message)
                        .unwrap_or_else(|_| Value::String(f.message.clone()));
                    json!({"w": f.w.window(), "property": f.property, "message": message})
                })
                .collect(),
        )
    }
}

/// Checks every property on every permutation of `S_n`. Results are
/// gathered in lexicographic order of the permutations.
pub fn sweep(n: usize) -> SweepReport {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let results: Vec<Vec<(&'static str, Check)>> =
        perms.par_iter().map(check_permutation).collect();
    let mut tallies: Vec<(&'static str, usize, usize)> =
        PROPERTIES.iter().map(|&p| (p, 0, 0)).collect();
    let mut failures = Vec::new();
    for (w, row) in perms.iter().zip(results) {
        for (k, (name, outcome)) in row.into_iter().enumerate() {
            match outcome {
                Ok(()) => tallies[k].1 += 1,
                Err(message) => {
                    tallies[k].2 += 1;
                    failures.push(Failure {
                        w: w.clone(),
                        property: name,
                        message,
                    });
                }
            }
        }
    }
    SweepReport {
        n,
        permutations: perms.len(),
        tallies,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_small() {
        for n in 1..=4 {
            let report = sweep(n);
            assert!(report.all_passed(), "{}", report.to_json());
        }
    }

    #[test]
    fn sweep_21543() {
        let w: Permutation = "21543".parse().unwrap();
        for (name, outcome) in check_permutation(&w) {
            assert_eq!(outcome, Ok(()), "{name}");
        }
    }
}
