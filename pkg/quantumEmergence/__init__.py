"""Causal emergence in an atomic Mach-Zehnder interferometer"""
