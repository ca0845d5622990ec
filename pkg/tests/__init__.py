"""Test package marker for importable test utilities."""