"""Pydantic schemas for records and reports at the JSON boundary."""
