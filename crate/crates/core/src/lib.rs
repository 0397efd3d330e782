pub mod repr;
pub mod ring;
pub mod rootsystem;
pub mod structconst;
pub mod words;
pub mod factorizer;
pub mod subgroupenum;
