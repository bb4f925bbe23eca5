"""
Services Module

The logic itself: syntax, substitution, the many-valued parameter logic,
extensional semantics and the proof calculus.
"""
