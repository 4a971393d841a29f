"""
Padovan Q-Matrix Block Codec
"""
