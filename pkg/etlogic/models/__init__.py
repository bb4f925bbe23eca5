"""Pydantic report schemas for command output."""
