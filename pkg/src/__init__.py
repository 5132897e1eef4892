# GLE finite-element solver and convergence-study package
