//! Ship-course tracking closed loops (to be filled in).
