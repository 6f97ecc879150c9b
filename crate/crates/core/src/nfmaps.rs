//! Closed-form normal-form coefficient maps (to be filled in).
