pub mod gf2;
