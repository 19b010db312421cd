pub mod algebra;
pub mod cat1;
pub mod covering;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod functor;
pub mod io;
pub mod lifting;
pub mod report;
pub mod xmod;

pub use error::{Error, Result};
pub use report::{Rule, ValidationReport, Violation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/crossed-modules.md")]
    mod crossed_modules {}
    #[doc = include_str!("../../../book/src/cat1.md")]
    mod cat1 {}
    #[doc = include_str!("../../../book/src/coverings-and-liftings.md")]
    mod coverings_and_liftings {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
