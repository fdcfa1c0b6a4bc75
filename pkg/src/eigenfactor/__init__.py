"""Factoring RSA moduli with an oracle for Hecke eigenform coefficients."""
