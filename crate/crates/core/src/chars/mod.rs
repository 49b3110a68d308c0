//! Exact character theory for small groups.

pub mod cyclotomic;
mod dixon;
mod induce;
mod table;

pub use cyclotomic::{Accumulator, Cyclotomic, CyclotomicJson, Rat};
pub use dixon::{dixon_table, table_of_indexed};
pub use induce::{induce_character, induce_restrict, restrict_character, ClassFusion, MultiplicityMatrix};
pub use table::{inner_product, CharacterTable, CharacterTableJson, ClassJson, TableClass};
