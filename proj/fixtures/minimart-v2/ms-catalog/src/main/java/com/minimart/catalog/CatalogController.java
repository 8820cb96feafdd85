package com.minimart.catalog;

import java.util.List;

import org.springframework.web.bind.annotation.GetMapping;
import org.springframework.web.bind.annotation.PathVariable;
import org.springframework.web.bind.annotation.RequestMapping;
import org.springframework.web.bind.annotation.RestController;

@RestController
@RequestMapping("/api/v1/catalog")
public class CatalogController {

    private final ProductRepository products;

    public CatalogController(ProductRepository products) {
        this.products = products;
    }

    @GetMapping("/products")
    public List<Product> list() {
        return products.findAll();
    }

    @GetMapping("/products/{id}")
    public Product byId(@PathVariable Long id) {
        return products.findById(id).orElseThrow();
    }

    // Same shape as byId; only the variable type differs.
    @GetMapping(value = "/products/{sku}")
    public Product bySku(@PathVariable("sku") String sku) {
        return products.findBySku(sku);
    }
}
