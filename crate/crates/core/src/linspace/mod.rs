//! Based vector spaces, sparse vectors and maps, tensor pipelines and exact
//! linear solving.

mod map;
mod solve;
mod space;
mod vector;

pub use map::{LinearMap, Tensor};
pub use solve::{inverse, kernel, kernel_of_rows, kernel_with_one, rank, Echelon, Subspace};
pub use space::{legs_dim, render_label, tensor_space, tensor_spaces, BasedSpace, BasisIndex};
pub use vector::{Acc, Vector};

use crate::scalars::{ScalarFormat, Scalar};

/// Vector in a based space.
#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    pub space: BasedSpace,
    pub coords: Vector,
}

impl Element {
    pub fn new(space: &BasedSpace, coords: Vector) -> Element {
        Element { space: space.clone(), coords }
    }

    pub fn basis(space: &BasedSpace, i: usize, one: Scalar) -> Element {
        Element { space: space.clone(), coords: Vector::unit(i, one) }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    /// Human-readable form such as `u + (1 - q^2)*y u^2`.
    pub fn render(&self, fmt: &ScalarFormat) -> String {
        render_vector(&self.space, &self.coords, fmt)
    }
}

pub fn render_vector(space: &BasedSpace, v: &Vector, fmt: &ScalarFormat) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in v.iter() {
        let b = space.render(*i);
        let cs = fmt.render(c);
        let neg_simple = cs.starts_with('-') && !cs[1..].contains([' ', '+', '-']);
        let term = if cs == "1" {
            b.clone()
        } else if cs == "-1" {
            format!("-{b}")
        } else if cs.contains([' ']) {
            format!("({cs})*{b}")
        } else {
            format!("{cs}*{b}")
        };
        let term = if b == "1" && cs != "1" && cs != "-1" {
            if cs.contains(' ') { format!("({cs})") } else { cs.clone() }
        } else {
            term
        };
        if out.is_empty() {
            out.push_str(&term);
        } else if neg_simple || term.starts_with('-') {
            out.push_str(" - ");
            out.push_str(&term[1..]);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}
