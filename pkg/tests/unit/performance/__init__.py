# Performance optimization tests package
