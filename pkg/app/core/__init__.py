# Core Package