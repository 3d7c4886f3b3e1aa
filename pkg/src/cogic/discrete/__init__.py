"""Discrete memoryless interference channels with degraded message sets."""
