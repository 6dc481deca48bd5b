//! Spectral stability for graphs without many `(r+1)`-cliques.
//!
//! Given a graph whose spectral radius is close to that of the Turán graph
//! `T_r(n)`, [`stability::stability_dichotomy`] returns a certificate that
//! either exhibits a complete `(r+1)`-partite subgraph `K_{r+1}(s, ..., s, t)`
//! or lists the edge edits turning the graph into `T_r(n)`.
//! [`stability::check_certificate`] re-verifies any certificate from scratch.
//!
//! ```
//! use spectral_stability::graph::turan_graph;
//! use spectral_stability::stability::{check_certificate, derived_params, stability_dichotomy, Overrides};
//!
//! let mut g = turan_graph(9, 3).unwrap();
//! g.add_edge(0, 1);
//! let ov = Overrides { joint_threshold: Some(1.0), ..Overrides::default() };
//! let params = derived_params(3, 0.5, 0.1, 9, ov).unwrap();
//! let cert = stability_dichotomy(&g, &params).unwrap();
//! assert_eq!((cert.tag(), cert.headline()), ("B", 1));
//! assert!(check_certificate(&g, &cert, &params).valid);
//! ```
//!
//! The guide in `book/` walks through each module; its code blocks are
//! compiled and run as doc-tests of this crate.

pub mod bitset;
pub mod cliques;
pub mod edit;
pub mod experiment;
pub mod graph;
pub mod io;
pub mod multipartite;
pub mod spectral;
pub mod stability;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/spectral.md")]
    mod spectral {}
    #[doc = include_str!("../../../book/src/cliques.md")]
    mod cliques {}
    #[doc = include_str!("../../../book/src/multipartite.md")]
    mod multipartite {}
    #[doc = include_str!("../../../book/src/stability.md")]
    mod stability {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
