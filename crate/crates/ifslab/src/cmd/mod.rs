pub mod cf;
pub mod coverage;
pub mod families;
pub mod phit;
pub mod pushforward;
pub mod separation;
pub mod sweep;
