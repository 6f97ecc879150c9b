//! Transition-set residuals, sampling and region classification (to be filled in).
