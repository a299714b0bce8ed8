# braceproducts.tests: __init__.py
