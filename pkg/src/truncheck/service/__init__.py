"""HTTP analysis service: scenarios in, analysis reports out."""
