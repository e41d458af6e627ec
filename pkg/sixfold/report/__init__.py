"""Reports, fixtures and the command line interface"""
