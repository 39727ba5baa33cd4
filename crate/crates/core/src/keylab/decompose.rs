//! Splitting `RP(w)` into Demazure crystal components and expanding the
//! Schubert polynomial as a sum of key polynomials.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::crystal::{crystal_graph, CrystalGraph};
use crate::error::{Error, Result};
use crate::keylab::d_tilde::algorithm_d_tilde;
use crate::keylab::lift::KeyShapedFilling;
use crate::perm::{push_action, shortest_sorting_perm, Composition, Permutation};
use crate::pipedream::PipeDream;
use crate::poly::{key_polynomial, weight_generating_function, SparsePolynomial};

/// One connected component of the crystal on `RP(w)`.
#[derive(Clone, Debug)]
pub struct CrystalComponent {
    pub highest: PipeDream,
    pub members: Vec<PipeDream>,
    pub lambda: Composition,
    pub d_tilde: KeyShapedFilling,
    pub pi: Permutation,
    pub a: Composition,
    pub character: SparsePolynomial,
    pub key: SparsePolynomial,
    /// The rearrangement of `λ` among the member weights with the longest
    /// sorting permutation, i.e. the lowest extremal weight of the component.
    pub a_extremal: Composition,
}

impl CrystalComponent {
    pub fn verified(&self) -> bool {
        self.character == self.key && push_action(&self.pi, &self.lambda) == self.a
    }

    /// `π` read off the crystal itself: the shortest permutation sorting
    /// [`CrystalComponent::a_extremal`].
    pub fn pi_extremal(&self) -> Permutation {
        shortest_sorting_perm(&self.a_extremal)
    }

    pub fn algorithm_matches_crystal(&self) -> bool {
        self.a == self.a_extremal
    }

    pub fn to_json(&self) -> Value {
        json!({
            "highest_weight_crosses": self.highest.canonical_crosses().iter().map(|&(r, c)| [r, c]).collect::<Vec<_>>(),
            "lambda": self.lambda.parts(),
            "pi_window": self.pi.window(),
            "pi_reduced_word": self.pi.reduced_expression().letters(),
            "a_D": self.a.parts(),
            "component_size": self.members.len(),
            "key_polynomial": self.key.to_text(),
            "verified": self.verified(),
            "a_extremal": self.a_extremal.parts(),
        })
    }
}

/// Among the member weights that rearrange `λ`, the one whose shortest
/// sorting permutation is longest.
pub fn extremal_weight(members: &[PipeDream], lambda: &Composition) -> Composition {
    let target = lambda.sorted_desc();
    members
        .iter()
        .map(PipeDream::weight)
        .filter(|v| v.sorted_desc() == target)
        .max_by_key(|v| (shortest_sorting_perm(v).length(), v.clone()))
        .unwrap_or_else(|| lambda.clone())
}

/// The full decomposition of `𝔖_w`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub w: Permutation,
    pub graph: CrystalGraph,
    pub components: Vec<CrystalComponent>,
    pub schubert: SparsePolynomial,
    pub key_sum: SparsePolynomial,
}

impl Decomposition {
    pub fn verified(&self) -> bool {
        self.schubert == self.key_sum && self.components.iter().all(CrystalComponent::verified)
    }

    /// `Σ κ` over the extremal weights of the components.
    pub fn extremal_key_sum(&self) -> SparsePolynomial {
        let n = self.w.n();
        SparsePolynomial::sum_of(
            n,
            self.components
                .iter()
                .map(|c| key_polynomial(&c.a_extremal)),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "w": self.w.window(),
            "num_pipe_dreams": self.graph.vertices.len(),
            "num_components": self.components.len(),
            "components": self.components.iter().map(CrystalComponent::to_json).collect::<Vec<_>>(),
            "schubert": self.schubert.to_text(),
            "verified": self.verified(),
        })
    }
}

/// Builds every component, reads `π_D` and `a_D = wt(D̃)` off the highest
/// weight vertex, and checks `Σ κ_{a_D} = 𝔖_w` together with
/// `character = κ_{a_D}` per component. A failed check is an
/// [`Error::Verification`] carrying the JSON report.
pub fn decompose_schubert(w: &Permutation) -> Result<Decomposition> {
    let d = decompose_unchecked(w)?;
    if !d.verified() {
        return Err(Error::Verification(d.to_json().to_string()));
    }
    Ok(d)
}

/// As [`decompose_schubert`] without the final check.
pub fn decompose_unchecked(w: &Permutation) -> Result<Decomposition> {
    let n = w.n();
    let graph = crystal_graph(w);
    let parts = graph.components()?;
    let components = parts
        .par_iter()
        .map(|part| {
            let highest = graph.vertices[part.highest].clone();
            let members: Vec<PipeDream> = part
                .members
                .iter()
                .map(|&v| graph.vertices[v].clone())
                .collect();
            let lambda = highest.weight();
            let d_tilde = algorithm_d_tilde(&highest)?;
            let a = d_tilde.weight(n);
            let pi = shortest_sorting_perm(&a);
            let weights: Vec<Composition> = members.iter().map(PipeDream::weight).collect();
            let a_extremal = extremal_weight(&members, &lambda);
            Ok(CrystalComponent {
                a_extremal,
                character: weight_generating_function(n, &weights),
                key: key_polynomial(&a),
                highest,
                members,
                lambda,
                d_tilde,
                pi,
                a,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_weights: Vec<Composition> = graph.vertices.iter().map(PipeDream::weight).collect();
    let schubert = weight_generating_function(n, &all_weights);
    let key_sum = SparsePolynomial::sum_of(n, components.iter().map(|c| c.key.clone()));
    Ok(Decomposition {
        w: w.clone(),
        graph,
        components,
        schubert,
        key_sum,
    })
}
