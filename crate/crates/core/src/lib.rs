pub mod algebra;
pub mod bialgebroid;
pub mod coring;
pub mod extension;
pub mod hopf;
pub mod hsep;
pub mod linalg;
pub mod verify;

/// The guide's chapters, compiled so their snippets stay in sync with the API.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    pub mod fields {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    pub mod algebras {}
    #[doc = include_str!("../../../book/src/depth-two.md")]
    pub mod depth_two {}
    #[doc = include_str!("../../../book/src/bialgebroids.md")]
    pub mod bialgebroids {}
    #[doc = include_str!("../../../book/src/hopf-galois.md")]
    pub mod hopf_galois {}
    #[doc = include_str!("../../../book/src/antipodes.md")]
    pub mod antipodes {}
    #[doc = include_str!("../../../book/src/corings.md")]
    pub mod corings {}
    #[doc = include_str!("../../../book/src/h-separable.md")]
    pub mod h_separable {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
